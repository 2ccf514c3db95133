#pragma once

#include <memory>
#include <string>
#include <vector>

#include "surfflow/analytic.hpp"
#include "surfflow/hodge.hpp"
#include "surfflow/whitney.hpp"

namespace surfflow {

// Mixed Darcy problem on a surface: Neumann flux on every boundary edge and
// the pressure pinned in one triangle.
struct DarcyProblem {
  std::shared_ptr<const SimplicialSurface> complex;
  HodgeFlavor flavor = HodgeFlavor::whitney;
  // Indexed by edge id; only boundary entries are read. Values are integrals
  // of sigma along the canonical edge direction.
  Eigen::VectorXd boundary_flux;
  int pinned_triangle = 0;
  double pinned_pressure = 0.0;
  double mobility = 1.0;  // permeability / viscosity
};

// Unknown numbering of the reduced system: interior edges first, then every
// triangle except the pinned one.
struct DofMap {
  std::vector<int> edge_dof;      // -1 for boundary edges
  std::vector<int> triangle_dof;  // -1 for the pinned triangle
  int num_edge_dofs = 0;
  int num_dofs = 0;
};

struct AssembledSystem {
  linalg::SparseMatrix matrix;  // symmetric, indefinite
  linalg::Vector rhs;
  DofMap dofs;
  std::vector<int> nonpositive_hodge_edges;
  std::vector<std::string> warnings;
};

// Builds [[-H/m, d1^T], [d1, 0]], removes prescribed boundary fluxes and the
// pinned pressure, and moves their columns to the right-hand side.
// Throws IncompatibleBC, IndexOutOfRange, DimensionMismatch.
AssembledSystem assemble(const DarcyProblem& problem, const DualMetrics& metrics);

struct SolveOptions {
  linalg::SolveMethod method = linalg::SolveMethod::automatic;
  double tolerance = 1e-10;
  int max_iterations = 0;  // 0 picks a size-based default
};

struct DarcySolution {
  Cochain1 sigma;              // every edge, prescribed values included
  Eigen::VectorXd pressure;    // per triangle
  double residual_norm = 0.0;  // relative residual of the reduced system
  double divergence_norm = 0.0;  // max |d1 sigma|
  linalg::SolveStats stats;
  std::vector<std::string> warnings;
};

// Throws SingularSystem / SolverDivergence (with mesh-quality context for DEC).
DarcySolution solve(const DarcyProblem& problem, const DualMetrics& metrics,
                    const SolveOptions& options = {});

// Signed sum of prescribed boundary fluxes, sum_e (+-1) flux_e with the sign
// of the incident triangle's traversal; zero for solvable data.
double boundary_flux_imbalance(const SimplicialSurface& sc, const Eigen::VectorXd& flux);

// Net flux leaving the domain through one boundary loop.
double loop_outward_flux(const SimplicialSurface& sc, const BoundaryLoop& loop,
                         const Cochain1& sigma);

// Index of the inflow loop: innermost circle for the annulus, the loop
// nearest z = 1 for the hemisphere.
int inflow_loop_index(const SimplicialSurface& sc, const AnalyticProblem& prob);

// Exact boundary data: exact_edge_flux on boundary edges, 0 elsewhere.
// Throws InvalidSpec if an edge subtends an azimuth of pi or more.
Eigen::VectorXd exact_boundary_flux(const SimplicialSurface& sc, const AnalyticProblem& prob);
// Exact flux cochain on every edge.
Cochain1 exact_flux_cochain(const SimplicialSurface& sc, const AnalyticProblem& prob);

// Where pressures are compared: circumcenters on well-centered meshes,
// barycenters otherwise.
bool pressure_at_circumcenters(const DualMetrics& metrics);
std::vector<Point3> pressure_sample_points(const DualMetrics& metrics);

// Triangle incident to the first edge of the inflow loop.
int default_pinned_triangle(const SimplicialSurface& sc, const AnalyticProblem& prob);

// Problem with exact Neumann data and the pin set to the closed-form
// pressure at the pinned triangle's sample point (so C0 applies directly).
DarcyProblem make_problem(std::shared_ptr<const SimplicialSurface> sc, const DualMetrics& metrics,
                          HodgeFlavor flavor, const AnalyticProblem& prob);

struct ErrorSample {
  Point3 barycenter;
  Point3 velocity;
  double r_speed = 0.0;
  double speed_computed = 0.0;
  double speed_exact = 0.0;
  double r_pressure = 0.0;
  double p_computed = 0.0;
  double p_exact = 0.0;
};

struct ErrorReport {
  double speed_l2_rel = 0.0;     // area-weighted
  double speed_max = 0.0;        // max absolute
  double pressure_l2_rel = 0.0;  // area-weighted, after gauge alignment
  double pressure_max = 0.0;     // max absolute, after gauge alignment
  double gauge_shift = 0.0;      // added to computed pressures before comparing
  bool pressure_at_circumcenters = false;
  std::vector<ErrorSample> samples;  // one per triangle, in id order
};

ErrorReport error_report(const SimplicialSurface& sc, const DarcySolution& solution,
                         const AnalyticProblem& prob, const DualMetrics& metrics);

// Relative area-weighted L2 norm ||a - b|| / ||b||; absolute when ||b|| = 0.
double weighted_relative_l2(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const Eigen::VectorXd& weights);

}  // namespace surfflow
