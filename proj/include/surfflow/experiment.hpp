#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surfflow/darcy.hpp"
#include "surfflow/meshgen.hpp"

namespace surfflow {

enum class Domain { annulus, hemisphere };

const char* to_string(Domain d);
Domain parse_domain(const std::string& name);

inline constexpr int kMaxLevels = 6;

struct RunConfig {
  Domain domain = Domain::annulus;
  HodgeFlavor method = HodgeFlavor::whitney;
  AnnulusSpec annulus;
  HemisphereSpec hemisphere;
  std::optional<std::string> mesh_path;  // overrides the generated base mesh
  int levels = 0;
  std::string output_dir = ".";
  double C0 = 0.0;
  double S0 = 1.0;
  bool emit_velocities = false;
  bool record_timing = true;  // false writes 0 in solve_seconds
  linalg::SolveMethod solver = linalg::SolveMethod::automatic;
};

// Throws InvalidSpec (levels outside [0, kMaxLevels], bad specs).
void validate(const RunConfig& config);

AnalyticProblem analytic_problem(const RunConfig& config);
Projection refinement_projection(Domain domain);
SimplicialSurface base_mesh(const RunConfig& config);

struct SolveRun {
  std::shared_ptr<const SimplicialSurface> mesh;
  DualMetrics metrics;
  QualityReport quality;
  DarcySolution solution;
  ErrorReport errors;
  double solve_seconds = 0.0;
};

SolveRun run_on_mesh(const RunConfig& config, std::shared_ptr<const SimplicialSurface> mesh);

// Base mesh refined `levels` times, solved, and written to output_dir:
// speeds.csv, pressures.csv, errors.txt, speeds.svg, pressures.svg and, with
// emit_velocities, velocities.csv.
SolveRun cmd_solve(const RunConfig& config);

struct ConvergenceRow {
  int level = 0;
  int triangles = 0;
  double h_max = 0.0;
  double speed_l2_rel = 0.0;
  double speed_max = 0.0;
  double pressure_l2_rel = 0.0;
  double pressure_max = 0.0;
  double solve_seconds = 0.0;
  QualityReport quality;
  std::vector<std::string> warnings;
};

// Solves on the base mesh and each of `levels` successive quadrisections.
std::vector<ConvergenceRow> run_convergence(const RunConfig& config);

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void write_errors_txt(std::ostream& out, const RunConfig& config, const SolveRun& run);

// Writes convergence.csv and convergence_quality.txt to output_dir.
// Requires levels >= 2.
std::vector<ConvergenceRow> cmd_converge(const RunConfig& config);

}  // namespace surfflow
