#include "surfflow/experiment.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "surfflow/mesh_io.hpp"
#include "surfflow/report.hpp"

namespace surfflow {

namespace fs = std::filesystem;

const char* to_string(Domain d) { return d == Domain::annulus ? "annulus" : "hemisphere"; }

Domain parse_domain(const std::string& name) {
  if (name == "annulus") return Domain::annulus;
  if (name == "hemisphere") return Domain::hemisphere;
  throw InvalidSpec("unknown domain '" + name + "' (expected annulus or hemisphere)");
}

void validate(const RunConfig& config) {
  if (config.levels < 0 || config.levels > kMaxLevels) {
    throw InvalidSpec("levels must be in [0, " + std::to_string(kMaxLevels) + "], got " +
                      std::to_string(config.levels));
  }
  if (!config.mesh_path) {
    if (config.domain == Domain::annulus) {
      validate(config.annulus);
    } else {
      validate(config.hemisphere);
    }
  }
  std::visit([](const auto& p) { validate(p); }, analytic_problem(config));
  if (!std::isfinite(config.S0) || !std::isfinite(config.C0)) throw InvalidSpec("S0 and C0 must be finite");
}

AnalyticProblem analytic_problem(const RunConfig& config) {
  if (config.domain == Domain::annulus) {
    return AnnulusProblem{config.annulus.r0, config.annulus.r1, config.S0, config.C0};
  }
  return HemisphereProblem{config.hemisphere.theta0, config.S0, config.C0};
}

Projection refinement_projection(Domain domain) {
  return domain == Domain::hemisphere ? Projection::unit_sphere : Projection::none;
}

SimplicialSurface base_mesh(const RunConfig& config) {
  if (config.mesh_path) return read_mesh_file(*config.mesh_path);
  return config.domain == Domain::annulus ? annulus_mesh(config.annulus)
                                          : hemisphere_mesh(config.hemisphere);
}

SolveRun run_on_mesh(const RunConfig& config, std::shared_ptr<const SimplicialSurface> mesh) {
  SolveRun run;
  run.mesh = std::move(mesh);
  run.metrics = compute_metrics(*run.mesh);
  run.quality = quality_report(*run.mesh, run.metrics);
  const AnalyticProblem prob = analytic_problem(config);

  const auto start = std::chrono::steady_clock::now();
  const DarcyProblem problem = make_problem(run.mesh, run.metrics, config.method, prob);
  SolveOptions opts;
  opts.method = config.solver;
  run.solution = solve(problem, run.metrics, opts);
  run.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!config.record_timing) run.solve_seconds = 0.0;

  run.errors = error_report(*run.mesh, run.solution, prob, run.metrics);
  return run;
}

namespace {

std::ofstream open_output(const RunConfig& config, const std::string& name) {
  fs::create_directories(config.output_dir);
  const fs::path path = fs::path(config.output_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidSpec("cannot write '" + path.string() + "'");
  return out;
}

std::vector<std::pair<double, double>> reference_curve(const AnalyticProblem& prob, bool pressure,
                                                       double r_lo, double r_hi) {
  std::vector<std::pair<double, double>> curve;
  constexpr int n = 200;
  const bool hemi = std::holds_alternative<HemisphereProblem>(prob);
  for (int i = 0; i <= n; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / n;
    // For the hemisphere, r = sin(theta) with theta in (0, pi/2].
    const Point3 p = hemi ? Point3(r, 0.0, std::sqrt(std::max(0.0, 1.0 - r * r))) : Point3(r, 0.0, 0.0);
    if (!(r > 0.0)) continue;
    curve.emplace_back(r, pressure ? pressure_at(prob, p) : speed_at(prob, p));
  }
  return curve;
}

void write_plots(const RunConfig& config, const SolveRun& run) {
  const AnalyticProblem prob = analytic_problem(config);
  const std::string tag = std::string(to_string(config.domain)) + ", " + to_string(config.method) +
                          ", " + std::to_string(run.mesh->num_triangles()) + " triangles";
  ScatterPlot speeds{"Speed vs r (" + tag + ")", "r", "speed", {}, {}};
  ScatterPlot pressures{"Pressure vs r (" + tag + ")", "r", "pressure", {}, {}};
  double lo_s = INFINITY, hi_s = -INFINITY, lo_p = INFINITY, hi_p = -INFINITY;
  for (const ErrorSample& s : run.errors.samples) {
    speeds.points.emplace_back(s.r_speed, s.speed_computed);
    pressures.points.emplace_back(s.r_pressure, s.p_computed);
    lo_s = std::min(lo_s, s.r_speed);
    hi_s = std::max(hi_s, s.r_speed);
    lo_p = std::min(lo_p, s.r_pressure);
    hi_p = std::max(hi_p, s.r_pressure);
  }
  if (!run.errors.samples.empty()) {
    speeds.curve = reference_curve(prob, false, lo_s, hi_s);
    pressures.curve = reference_curve(prob, true, lo_p, hi_p);
  }
  auto s_out = open_output(config, "speeds.svg");
  write_scatter_svg(s_out, speeds);
  auto p_out = open_output(config, "pressures.svg");
  write_scatter_svg(p_out, pressures);
}

}  // namespace

void write_errors_txt(std::ostream& out, const RunConfig& config, const SolveRun& run) {
  const ErrorReport& e = run.errors;
  const QualityReport& q = run.quality;
  out << "domain " << to_string(config.domain) << '\n'
      << "method " << to_string(config.method) << '\n'
      << "triangles " << run.mesh->num_triangles() << '\n'
      << "speed_l2_rel " << format_double(e.speed_l2_rel) << '\n'
      << "speed_max " << format_double(e.speed_max) << '\n'
      << "pressure_l2_rel " << format_double(e.pressure_l2_rel) << '\n'
      << "pressure_max " << format_double(e.pressure_max) << '\n'
      << "gauge_shift " << format_double(e.gauge_shift) << '\n'
      << "pressure_location " << (e.pressure_at_circumcenters ? "circumcenter" : "barycenter") << '\n'
      << "residual_norm " << format_double(run.solution.residual_norm) << '\n'
      << "divergence_norm " << format_double(run.solution.divergence_norm) << '\n'
      << "solver " << linalg::to_string(run.solution.stats.method) << '\n'
      << "delaunay " << (q.delaunay ? "true" : "false") << '\n'
      << "well_centered " << (q.well_centered ? "true" : "false") << '\n'
      << "min_angle " << format_double(q.min_angle) << '\n'
      << "max_angle " << format_double(q.max_angle) << '\n'
      << "non_delaunay_edges " << q.non_delaunay_edges << '\n'
      << "nonpositive_dual_edges " << q.nonpositive_dual_edges << '\n'
      << "non_acute_triangles " << q.non_acute_triangles << '\n';
  for (const std::string& w : run.solution.warnings) out << "warning " << w << '\n';
}

SolveRun cmd_solve(const RunConfig& config) {
  validate(config);
  auto mesh = std::make_shared<const SimplicialSurface>(
      refine(base_mesh(config), config.levels, refinement_projection(config.domain)));
  SolveRun run = run_on_mesh(config, mesh);

  auto speeds = open_output(config, "speeds.csv");
  write_speeds_csv(speeds, run.errors);
  auto pressures = open_output(config, "pressures.csv");
  write_pressures_csv(pressures, run.errors);
  auto errors = open_output(config, "errors.txt");
  write_errors_txt(errors, config, run);
  if (config.emit_velocities) {
    auto vel = open_output(config, "velocities.csv");
    write_velocities_csv(vel, run.errors);
  }
  write_plots(config, run);
  return run;
}

std::vector<ConvergenceRow> run_convergence(const RunConfig& config) {
  validate(config);
  std::vector<ConvergenceRow> rows;
  auto mesh = std::make_shared<const SimplicialSurface>(base_mesh(config));
  for (int level = 0; level <= config.levels; ++level) {
    if (level > 0) {
      mesh = std::make_shared<const SimplicialSurface>(
          quadrisect(*mesh, refinement_projection(config.domain)));
    }
    const SolveRun run = run_on_mesh(config, mesh);
    ConvergenceRow row;
    row.level = level;
    row.triangles = mesh->num_triangles();
    row.h_max = max_edge_length(run.metrics);
    row.speed_l2_rel = run.errors.speed_l2_rel;
    row.speed_max = run.errors.speed_max;
    row.pressure_l2_rel = run.errors.pressure_l2_rel;
    row.pressure_max = run.errors.pressure_max;
    row.solve_seconds = run.solve_seconds;
    row.quality = run.quality;
    row.warnings = run.solution.warnings;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "level,triangles,h_max,speed_l2_rel,speed_max,pressure_l2_rel,pressure_max,solve_seconds\n";
  for (const ConvergenceRow& r : rows) {
    out << r.level << ',' << r.triangles << ',' << format_double(r.h_max) << ','
        << format_double(r.speed_l2_rel) << ',' << format_double(r.speed_max) << ','
        << format_double(r.pressure_l2_rel) << ',' << format_double(r.pressure_max) << ','
        << format_double(r.solve_seconds) << '\n';
  }
}

std::vector<ConvergenceRow> cmd_converge(const RunConfig& config) {
  if (config.levels < 2) throw InvalidSpec("converge needs --levels >= 2");
  std::vector<ConvergenceRow> rows = run_convergence(config);
  auto csv = open_output(config, "convergence.csv");
  write_convergence_csv(csv, rows);
  auto q = open_output(config, "convergence_quality.txt");
  q << "# level triangles delaunay well_centered min_angle nonpositive_dual_edges\n";
  for (const ConvergenceRow& r : rows) {
    q << r.level << ' ' << r.triangles << ' ' << (r.quality.delaunay ? "true" : "false") << ' '
      << (r.quality.well_centered ? "true" : "false") << ' ' << format_double(r.quality.min_angle) << ' '
      << r.quality.nonpositive_dual_edges << '\n';
    for (const std::string& w : r.warnings) q << "#   warning " << w << '\n';
  }
  return rows;
}

}  // namespace surfflow
