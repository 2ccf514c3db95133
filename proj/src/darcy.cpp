#include "surfflow/darcy.hpp"

#include <cmath>
#include <numbers>

namespace surfflow {

namespace {

void check_problem(const DarcyProblem& p) {
  if (!p.complex) throw InvalidSpec("Darcy problem has no complex");
  const SimplicialSurface& sc = *p.complex;
  if (p.boundary_flux.size() != sc.num_edges()) {
    throw DimensionMismatch("boundary flux has " + std::to_string(p.boundary_flux.size()) +
                            " entries, complex has " + std::to_string(sc.num_edges()) + " edges");
  }
  for (int e : sc.boundary_edges()) {
    if (!std::isfinite(p.boundary_flux[e])) {
      throw IncompatibleBC("boundary edge " + std::to_string(e) + " has no prescribed flux");
    }
  }
  if (p.pinned_triangle < 0 || p.pinned_triangle >= sc.num_triangles()) {
    throw IndexOutOfRange("pinned triangle " + std::to_string(p.pinned_triangle) + " out of range");
  }
  if (!(p.mobility > 0.0)) throw InvalidSpec("mobility must be positive");
}

std::string quality_context(const SimplicialSurface& sc, const DualMetrics& metrics) {
  const QualityReport q = quality_report(sc, metrics);
  return " [delaunay=" + std::string(q.delaunay ? "true" : "false") +
         ", well_centered=" + std::string(q.well_centered ? "true" : "false") +
         ", nonpositive_dual_edges=" + std::to_string(q.nonpositive_dual_edges) + "]";
}

}  // namespace

double boundary_flux_imbalance(const SimplicialSurface& sc, const Eigen::VectorXd& flux) {
  double sum = 0.0;
  for (const BoundaryLoop& loop : sc.boundary_loops()) {
    for (std::size_t i = 0; i < loop.edges.size(); ++i) sum += loop.signs[i] * flux[loop.edges[i]];
  }
  return sum;
}

double loop_outward_flux(const SimplicialSurface& sc, const BoundaryLoop& loop, const Cochain1& sigma) {
  if (sigma.size() != sc.num_edges()) throw DimensionMismatch("cochain size differs from edge count");
  double sum = 0.0;
  for (std::size_t i = 0; i < loop.edges.size(); ++i) sum += loop.signs[i] * sigma[loop.edges[i]];
  return sum;
}

AssembledSystem assemble(const DarcyProblem& problem, const DualMetrics& metrics) {
  check_problem(problem);
  const SimplicialSurface& sc = *problem.complex;
  const int ne = sc.num_edges();
  const int nt = sc.num_triangles();

  double scale = 0.0;
  for (int e : sc.boundary_edges()) scale += std::abs(problem.boundary_flux[e]);
  const double imbalance = boundary_flux_imbalance(sc, problem.boundary_flux);
  if (std::abs(imbalance) > 1e-10 * std::max(scale, 1e-300) && imbalance != 0.0) {
    throw IncompatibleBC("boundary fluxes sum to " + std::to_string(imbalance) +
                         " (total magnitude " + std::to_string(scale) +
                         "); pure-Neumann data must balance");
  }

  AssembledSystem sys;
  HodgeStar1 star = hodge_star_1(sc, metrics, problem.flavor);
  if (problem.flavor == HodgeFlavor::dec && !star.nonpositive_edges.empty()) {
    sys.nonpositive_hodge_edges = star.nonpositive_edges;
    sys.warnings.push_back("non-Delaunay warning: DEC Hodge star has " +
                           std::to_string(star.nonpositive_edges.size()) +
                           " nonpositive diagonal entries");
  }
  const linalg::SparseMatrix hodge = star.matrix / problem.mobility;
  const linalg::SparseMatrix full = linalg::block_assemble(hodge, coboundary_1(sc));

  DofMap& dofs = sys.dofs;
  dofs.edge_dof.assign(ne, -1);
  dofs.triangle_dof.assign(nt, -1);
  int next = 0;
  for (int e = 0; e < ne; ++e) {
    if (!sc.is_boundary_edge(e)) dofs.edge_dof[e] = next++;
  }
  dofs.num_edge_dofs = next;
  for (int t = 0; t < nt; ++t) {
    if (t != problem.pinned_triangle) dofs.triangle_dof[t] = next++;
  }
  dofs.num_dofs = next;

  // Selection S maps reduced unknowns into the full (sigma, p) vector; the
  // reduced operator is S^T K S and the known values move to the rhs.
  std::vector<linalg::Triplet> sel;
  sel.reserve(static_cast<std::size_t>(next));
  linalg::Vector known = linalg::Vector::Zero(ne + nt);
  for (int e = 0; e < ne; ++e) {
    if (dofs.edge_dof[e] >= 0) {
      sel.emplace_back(e, dofs.edge_dof[e], 1.0);
    } else {
      known[e] = problem.boundary_flux[e];
    }
  }
  for (int t = 0; t < nt; ++t) {
    if (dofs.triangle_dof[t] >= 0) {
      sel.emplace_back(ne + t, dofs.triangle_dof[t], 1.0);
    } else {
      known[ne + t] = problem.pinned_pressure;
    }
  }
  const linalg::SparseMatrix s = linalg::from_triplets<double>(ne + nt, next, sel);
  const linalg::SparseMatrix st = linalg::transpose(s);
  sys.matrix = linalg::multiply(linalg::multiply(st, full), s);
  sys.rhs = -(st * (full * known));
  return sys;
}

DarcySolution solve(const DarcyProblem& problem, const DualMetrics& metrics, const SolveOptions& options) {
  AssembledSystem sys = assemble(problem, metrics);
  const SimplicialSurface& sc = *problem.complex;

  linalg::SolveResult res;
  try {
    res = linalg::solve_symmetric_indefinite(sys.matrix, sys.rhs, options.tolerance, options.method,
                                             options.max_iterations);
  } catch (const SingularSystem& e) {
    throw SingularSystem(std::string(e.what()) + " (flavor=" + to_string(problem.flavor) + ")" +
                         quality_context(sc, metrics));
  } catch (const SolverDivergence& e) {
    throw SolverDivergence(std::string(e.what()) + " (flavor=" + to_string(problem.flavor) + ")" +
                           quality_context(sc, metrics));
  }

  DarcySolution sol;
  sol.sigma.resize(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) {
    const int d = sys.dofs.edge_dof[e];
    sol.sigma[e] = d >= 0 ? res.x[d] : problem.boundary_flux[e];
  }
  sol.pressure.resize(sc.num_triangles());
  for (int t = 0; t < sc.num_triangles(); ++t) {
    const int d = sys.dofs.triangle_dof[t];
    sol.pressure[t] = d >= 0 ? res.x[d] : problem.pinned_pressure;
  }
  sol.residual_norm = res.relative_residual;
  sol.stats = res.stats;
  sol.warnings = std::move(sys.warnings);
  const Eigen::VectorXd div = coboundary_1(sc) * sol.sigma;
  sol.divergence_norm = div.size() > 0 ? div.cwiseAbs().maxCoeff() : 0.0;
  if (res.stats.fell_back) sol.warnings.push_back("direct factorization failed; used MINRES");
  return sol;
}

int inflow_loop_index(const SimplicialSurface& sc, const AnalyticProblem& prob) {
  const auto& loops = sc.boundary_loops();
  if (loops.empty()) throw InvalidSpec("mesh has no boundary; cannot identify the inflow loop");
  const bool annulus = std::holds_alternative<AnnulusProblem>(prob);
  int best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < loops.size(); ++i) {
    double acc = 0.0;
    for (int v : loops[i].vertices) {
      const Point3& p = sc.vertices()[v];
      acc += annulus ? -std::hypot(p.x(), p.y()) : p.z();
    }
    const double score = acc / static_cast<double>(loops[i].vertices.size());
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(i);
    }
  }
  return best;
}

Eigen::VectorXd exact_boundary_flux(const SimplicialSurface& sc, const AnalyticProblem& prob) {
  Eigen::VectorXd flux = Eigen::VectorXd::Zero(sc.num_edges());
  for (int e : sc.boundary_edges()) {
    const Point3& a = sc.vertices()[sc.edges()[e].v0];
    const Point3& b = sc.vertices()[sc.edges()[e].v1];
    if (std::abs(azimuth_difference(a, b)) >= std::numbers::pi * (1.0 - 1e-12)) {
      throw InvalidSpec("boundary edge " + std::to_string(e) +
                        " subtends an azimuth of pi or more; the exact flux is ambiguous");
    }
    flux[e] = exact_edge_flux(prob, a, b);
  }
  return flux;
}

Cochain1 exact_flux_cochain(const SimplicialSurface& sc, const AnalyticProblem& prob) {
  Cochain1 c(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) {
    c[e] = exact_edge_flux(prob, sc.vertices()[sc.edges()[e].v0], sc.vertices()[sc.edges()[e].v1]);
  }
  return c;
}

bool pressure_at_circumcenters(const DualMetrics& metrics) {
  for (char wc : metrics.is_well_centered) {
    if (!wc) return false;
  }
  return true;
}

std::vector<Point3> pressure_sample_points(const DualMetrics& metrics) {
  return pressure_at_circumcenters(metrics) ? metrics.circumcenter : metrics.barycenter;
}

int default_pinned_triangle(const SimplicialSurface& sc, const AnalyticProblem& prob) {
  const BoundaryLoop& loop = sc.boundary_loops()[inflow_loop_index(sc, prob)];
  return sc.edge_triangles(loop.edges.front())[0];
}

DarcyProblem make_problem(std::shared_ptr<const SimplicialSurface> sc, const DualMetrics& metrics,
                          HodgeFlavor flavor, const AnalyticProblem& prob) {
  DarcyProblem p;
  p.flavor = flavor;
  p.boundary_flux = exact_boundary_flux(*sc, prob);
  p.pinned_triangle = default_pinned_triangle(*sc, prob);
  p.pinned_pressure = pressure_at(prob, pressure_sample_points(metrics)[p.pinned_triangle]);
  p.complex = std::move(sc);
  return p;
}

double weighted_relative_l2(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& weights) {
  const double num = std::sqrt((weights.array() * (a - b).array().square()).sum());
  const double den = std::sqrt((weights.array() * b.array().square()).sum());
  return den > 0.0 ? num / den : num;
}

ErrorReport error_report(const SimplicialSurface& sc, const DarcySolution& solution,
                         const AnalyticProblem& prob, const DualMetrics& metrics) {
  const int nt = sc.num_triangles();
  if (solution.pressure.size() != nt) throw DimensionMismatch("pressure size differs from triangle count");
  ErrorReport rep;
  rep.pressure_at_circumcenters = pressure_at_circumcenters(metrics);
  const std::vector<Point3> p_points = pressure_sample_points(metrics);
  const std::vector<Point3> vel = velocity_from_flux(sc, solution.sigma, metrics);

  Eigen::VectorXd s_num(nt), s_ex(nt), p_num(nt), p_ex(nt);
  rep.samples.resize(static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t) {
    ErrorSample& s = rep.samples[t];
    s.barycenter = metrics.barycenter[t];
    s.velocity = vel[t];
    s.r_speed = plot_radius(prob, s.barycenter);
    s.speed_computed = vel[t].norm();
    s.speed_exact = speed_at(prob, s.barycenter);
    s.r_pressure = plot_radius(prob, p_points[t]);
    s.p_computed = solution.pressure[t];
    s.p_exact = pressure_at(prob, p_points[t]);
    s_num[t] = s.speed_computed;
    s_ex[t] = s.speed_exact;
    p_num[t] = s.p_computed;
    p_ex[t] = s.p_exact;
  }
  const Eigen::VectorXd& w = metrics.tri_area;
  const double total_area = w.sum();
  rep.gauge_shift = total_area > 0.0 ? (w.array() * (p_ex - p_num).array()).sum() / total_area : 0.0;
  const Eigen::VectorXd p_aligned = p_num.array() + rep.gauge_shift;

  rep.speed_l2_rel = weighted_relative_l2(s_num, s_ex, w);
  rep.speed_max = nt > 0 ? (s_num - s_ex).cwiseAbs().maxCoeff() : 0.0;
  rep.pressure_l2_rel = weighted_relative_l2(p_aligned, p_ex, w);
  rep.pressure_max = nt > 0 ? (p_aligned - p_ex).cwiseAbs().maxCoeff() : 0.0;
  return rep;
}

}  // namespace surfflow
