// Command-line front end: mesh generation, single solves, convergence studies.
//
// Exit codes: 0 success, 1 invalid input, 2 solver failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "surfflow/experiment.hpp"
#include "surfflow/mesh_io.hpp"
#include "surfflow/report.hpp"

namespace {

using namespace surfflow;

struct Flags {
  std::string domain = "annulus";
  std::string method = "whitney";
  std::string solver = "automatic";
  std::string mesh_path;
  std::string out;
  RunConfig config;
  bool no_timing = false;
};

void add_spec_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--r0", f.config.annulus.r0, "annulus inner radius");
  cmd->add_option("--r1", f.config.annulus.r1, "annulus outer radius");
  cmd->add_option("--rings", f.config.annulus.n_rings, "annulus radial layers");
  cmd->add_option("--sectors", f.config.annulus.n_sectors, "annulus angular sectors");
  cmd->add_option("--theta0", f.config.hemisphere.theta0, "hemisphere hole colatitude (radians)");
  cmd->add_option("--lat", f.config.hemisphere.n_lat, "hemisphere latitude bands");
  cmd->add_option("--lon", f.config.hemisphere.n_lon, "hemisphere longitude sectors");
  cmd->add_option("--levels", f.config.levels, "quadrisection levels")->check(CLI::Range(0, kMaxLevels));
}

void add_run_flags(CLI::App* cmd, Flags& f) {
  add_spec_flags(cmd, f);
  cmd->add_option("--domain", f.domain, "annulus | hemisphere")
      ->check(CLI::IsMember({"annulus", "hemisphere"}));
  cmd->add_option("--method", f.method, "dec | whitney")->check(CLI::IsMember({"dec", "whitney"}));
  cmd->add_option("--mesh", f.mesh_path, "read the base mesh from a file instead of generating it");
  cmd->add_option("--out", f.out, "output directory")->default_val(".");
  cmd->add_option("--c0", f.config.C0, "pressure at the inflow boundary");
  cmd->add_option("--s0", f.config.S0, "inflow speed");
  cmd->add_option("--solver", f.solver, "direct | minres | automatic")
      ->check(CLI::IsMember({"direct", "minres", "automatic"}));
}

linalg::SolveMethod parse_solver(const std::string& s) {
  if (s == "direct") return linalg::SolveMethod::direct;
  if (s == "minres") return linalg::SolveMethod::minres;
  return linalg::SolveMethod::automatic;
}

RunConfig finish_config(Flags& f) {
  RunConfig c = f.config;
  c.domain = parse_domain(f.domain);
  c.method = parse_hodge_flavor(f.method);
  c.solver = parse_solver(f.solver);
  if (!f.mesh_path.empty()) c.mesh_path = f.mesh_path;
  c.output_dir = f.out.empty() ? "." : f.out;
  c.record_timing = !f.no_timing;
  return c;
}

int cmd_mesh(Flags& f) {
  RunConfig c = f.config;
  c.domain = parse_domain(f.domain);
  validate(c);
  const SimplicialSurface mesh = refine(base_mesh(c), c.levels, refinement_projection(c.domain));
  const std::string path = f.out.empty() ? std::string(to_string(c.domain)) + ".mesh" : f.out;
  if (const auto parent = std::filesystem::path(path).parent_path(); !parent.empty()) {
    std::filesystem::create_directories(parent);
  }
  write_mesh_file(path, mesh);
  const DualMetrics metrics = compute_metrics(mesh);
  std::ofstream sidecar(path + ".quality.json", std::ios::binary);
  sidecar << quality_json(quality_report(mesh, metrics));
  std::printf("wrote %s (%d vertices, %d triangles)\n", path.c_str(), mesh.num_vertices(),
              mesh.num_triangles());
  return 0;
}

int cmd_solve_main(Flags& f) {
  const RunConfig c = finish_config(f);
  const SolveRun run = cmd_solve(c);
  for (const std::string& w : run.solution.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::printf("%s/%s on %d triangles: speed_l2_rel=%.6g pressure_l2_rel=%.6g\n", to_string(c.domain),
              to_string(c.method), run.mesh->num_triangles(), run.errors.speed_l2_rel,
              run.errors.pressure_l2_rel);
  return 0;
}

int cmd_converge_main(Flags& f) {
  const RunConfig c = finish_config(f);
  const auto rows = cmd_converge(c);
  write_convergence_csv(std::cout, rows);
  for (const auto& r : rows) {
    if (c.method == HodgeFlavor::dec && !r.quality.delaunay) {
      std::fprintf(stderr, "warning: level %d mesh is not Delaunay; DEC result is flagged\n", r.level);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed DEC / Whitney Darcy flow on planar and surface annuli"};
  app.require_subcommand(1);

  Flags mesh_flags, solve_flags, conv_flags;

  auto* mesh = app.add_subcommand("mesh", "generate a mesh file and a quality sidecar");
  mesh->add_option("domain", mesh_flags.domain, "annulus | hemisphere")
      ->required()
      ->check(CLI::IsMember({"annulus", "hemisphere"}));
  add_spec_flags(mesh, mesh_flags);
  mesh->add_option("-o,--out", mesh_flags.out, "output mesh path");

  auto* solve = app.add_subcommand("solve", "solve once and write CSV, SVG and error summary");
  add_run_flags(solve, solve_flags);
  solve->add_flag("--emit-velocities", solve_flags.config.emit_velocities,
                  "also write velocities.csv (x,y,z,vx,vy,vz)");

  auto* conv = app.add_subcommand("converge", "run a quadrisection convergence study");
  add_run_flags(conv, conv_flags);
  conv_flags.config.levels = 2;
  conv->add_flag("--no-timing", conv_flags.no_timing, "write 0 for solve_seconds (byte-stable output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*mesh) return cmd_mesh(mesh_flags);
    if (*solve) return cmd_solve_main(solve_flags);
    if (*conv) return cmd_converge_main(conv_flags);
  } catch (const SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
