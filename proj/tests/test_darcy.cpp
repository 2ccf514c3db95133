#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <numbers>

#include "surfflow/darcy.hpp"
#include "surfflow/meshgen.hpp"

using namespace surfflow;

namespace {

std::shared_ptr<const SimplicialSurface> share(SimplicialSurface sc) {
  return std::make_shared<const SimplicialSurface>(std::move(sc));
}

// Full (unreduced) system solved densely: Hodge rows on interior edges,
// prescribed values on boundary edges, divergence rows on all but the pinned
// triangle, and the pin itself.
void dense_reference(const DarcyProblem& p, const DualMetrics& m, Eigen::VectorXd& sigma,
                     Eigen::VectorXd& pressure) {
  const SimplicialSurface& sc = *p.complex;
  const int ne = sc.num_edges(), nt = sc.num_triangles();
  const Eigen::MatrixXd h = Eigen::MatrixXd(hodge_star_1(sc, m, p.flavor).matrix) / p.mobility;
  const Eigen::MatrixXd d1 = Eigen::MatrixXd(coboundary_1(sc));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(ne + nt, ne + nt);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(ne + nt);
  for (int e = 0; e < ne; ++e) {
    if (sc.is_boundary_edge(e)) {
      a(e, e) = 1.0;
      b[e] = p.boundary_flux[e];
    } else {
      a.row(e).head(ne) = -h.row(e);
      a.row(e).tail(nt) = d1.col(e).transpose();
    }
  }
  for (int t = 0; t < nt; ++t) {
    if (t == p.pinned_triangle) {
      a(ne + t, ne + t) = 1.0;
      b[ne + t] = p.pinned_pressure;
    } else {
      a.row(ne + t).head(ne) = d1.row(t);
    }
  }
  const Eigen::VectorXd x = a.fullPivLu().solve(b);
  sigma = x.head(ne);
  pressure = x.tail(nt);
}

}  // namespace

TEST_CASE("zero boundary flux gives zero flux and constant pressure") {
  const auto sc = share(annulus_mesh({}));
  const DualMetrics m = compute_metrics(*sc);
  for (HodgeFlavor f : {HodgeFlavor::dec, HodgeFlavor::whitney}) {
    DarcyProblem p{sc, f, Eigen::VectorXd::Zero(sc->num_edges()), 5, 1.5, 1.0};
    const DarcySolution s = solve(p, m);
    CHECK(s.sigma.cwiseAbs().maxCoeff() < 1e-14);
    CHECK((s.pressure.array() - 1.5).abs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("reduced system is symmetric with the expected size") {
  const auto sc = share(annulus_mesh({1.0, 2.0, 11, 22}));
  REQUIRE(sc->num_triangles() == 484);
  const DualMetrics m = compute_metrics(*sc);
  const AnalyticProblem prob = AnnulusProblem{};
  for (HodgeFlavor f : {HodgeFlavor::dec, HodgeFlavor::whitney}) {
    const AssembledSystem sys = assemble(make_problem(sc, m, f, prob), m);
    const int expected = static_cast<int>(sc->interior_edges().size()) + sc->num_triangles() - 1;
    CHECK(sys.dofs.num_dofs == expected);
    CHECK(sys.matrix.rows() == expected);
    CHECK(sys.dofs.num_edge_dofs == static_cast<int>(sc->interior_edges().size()));
    CHECK(linalg::asymmetry(sys.matrix) < 1e-14 * linalg::max_abs(sys.matrix));
  }
}

TEST_CASE("reduced solve matches a dense solve of the full system") {
  const AnalyticProblem probs[] = {AnnulusProblem{}, HemisphereProblem{}};
  const std::shared_ptr<const SimplicialSurface> meshes[] = {share(annulus_mesh({1.0, 2.0, 3, 12})),
                                                            share(hemisphere_mesh({std::numbers::pi / 6, 3, 12}))};
  for (int i = 0; i < 2; ++i) {
    const DualMetrics m = compute_metrics(*meshes[i]);
    for (HodgeFlavor f : {HodgeFlavor::dec, HodgeFlavor::whitney}) {
      DarcyProblem p = make_problem(meshes[i], m, f, probs[i]);
      p.mobility = 0.7;
      const DarcySolution s = solve(p, m);
      Eigen::VectorXd sigma, pressure;
      dense_reference(p, m, sigma, pressure);
      CHECK((s.sigma - sigma).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((s.pressure - pressure).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("incompatible boundary data is rejected") {
  const auto sc = share(annulus_mesh({}));
  const DualMetrics m = compute_metrics(*sc);
  DarcyProblem p = make_problem(sc, m, HodgeFlavor::whitney, AnnulusProblem{});
  p.boundary_flux[sc->boundary_edges()[0]] += 1e-3;
  CHECK_THROWS_AS(assemble(p, m), IncompatibleBC);
  CHECK_THROWS_AS(solve(p, m), IncompatibleBC);
  DarcyProblem bad = make_problem(sc, m, HodgeFlavor::whitney, AnnulusProblem{});
  bad.pinned_triangle = sc->num_triangles();
  CHECK_THROWS_AS(assemble(bad, m), IndexOutOfRange);
}

TEST_CASE("linearity and gauge") {
  const auto sc = share(hemisphere_mesh({}));
  const DualMetrics m = compute_metrics(*sc);
  const DarcyProblem base = make_problem(sc, m, HodgeFlavor::whitney, HemisphereProblem{});
  const DarcySolution s0 = solve(base, m);

  DarcyProblem scaled = base;
  scaled.boundary_flux *= 2.0;
  scaled.pinned_pressure *= 2.0;
  const DarcySolution s1 = solve(scaled, m);
  CHECK((s1.sigma - 2.0 * s0.sigma).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((s1.pressure - 2.0 * s0.pressure).cwiseAbs().maxCoeff() < 1e-10);

  DarcyProblem shifted = base;
  shifted.pinned_pressure += 4.0;
  const DarcySolution s2 = solve(shifted, m);
  CHECK((s2.sigma - s0.sigma).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(((s2.pressure - s0.pressure).array() - 4.0).abs().maxCoeff() < 1e-10);
}

TEST_CASE("mass conservation") {
  for (HodgeFlavor f : {HodgeFlavor::dec, HodgeFlavor::whitney}) {
    const auto sc = share(refine(annulus_mesh({}), 1));
    const DualMetrics m = compute_metrics(*sc);
    const AnalyticProblem prob = AnnulusProblem{};
    const DarcySolution s = solve(make_problem(sc, m, f, prob), m);
    const Eigen::VectorXd div = linalg::spmv(coboundary_1(*sc), s.sigma);
    CHECK(div.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(s.divergence_norm < 1e-12);
    const auto loops = sc->boundary_loops();
    const int in = inflow_loop_index(*sc, prob);
    const double in_flux = -loop_outward_flux(*sc, loops[in], s.sigma);
    const double out_flux = loop_outward_flux(*sc, loops[1 - in], s.sigma);
    CHECK(in_flux == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-12));
    CHECK(out_flux == doctest::Approx(in_flux).epsilon(1e-12));
  }
}

TEST_CASE("exact flux cochain is closed") {
  const auto sc = refine(hemisphere_mesh({}), 1, Projection::unit_sphere);
  const Eigen::VectorXd sigma = exact_flux_cochain(sc, HemisphereProblem{});
  CHECK(linalg::spmv(coboundary_1(sc), sigma).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(boundary_flux_imbalance(sc, exact_boundary_flux(sc, HemisphereProblem{}))) < 1e-13);
}

TEST_CASE("MINRES and direct agree") {
  const auto sc = share(refine(annulus_mesh({}), 1));
  const DualMetrics m = compute_metrics(*sc);
  for (HodgeFlavor f : {HodgeFlavor::dec, HodgeFlavor::whitney}) {
    const DarcyProblem p = make_problem(sc, m, f, AnnulusProblem{});
    SolveOptions direct, iterative;
    direct.method = linalg::SolveMethod::direct;
    iterative.method = linalg::SolveMethod::minres;
    iterative.tolerance = 1e-11;
    const DarcySolution a = solve(p, m, direct);
    const DarcySolution b = solve(p, m, iterative);
    CHECK(b.stats.method == linalg::SolveMethod::minres);
    CHECK((a.sigma - b.sigma).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((a.pressure - b.pressure).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("DEC on a non-Delaunay mesh warns") {
  const auto sc = share(refine(hemisphere_mesh({}), 1, Projection::unit_sphere));
  const DualMetrics m = compute_metrics(*sc);
  REQUIRE_FALSE(quality_report(*sc, m).delaunay);
  const AssembledSystem sys = assemble(make_problem(sc, m, HodgeFlavor::dec, HemisphereProblem{}), m);
  CHECK_FALSE(sys.nonpositive_hodge_edges.empty());
  REQUIRE_FALSE(sys.warnings.empty());
  CHECK(sys.warnings[0].find("non-Delaunay") != std::string::npos);
  const AssembledSystem w = assemble(make_problem(sc, m, HodgeFlavor::whitney, HemisphereProblem{}), m);
  CHECK(w.warnings.empty());
}

TEST_CASE("error report on the exact data") {
  const auto sc = share(refine(annulus_mesh({}), 1));
  const DualMetrics m = compute_metrics(*sc);
  const AnalyticProblem prob = AnnulusProblem{1.0, 2.0, 1.0, 2.0};
  const DarcySolution s = solve(make_problem(sc, m, HodgeFlavor::dec, prob), m);
  const ErrorReport r = error_report(*sc, s, prob, m);
  CHECK(r.samples.size() == static_cast<std::size_t>(sc->num_triangles()));
  CHECK(r.pressure_at_circumcenters);
  CHECK(r.speed_l2_rel < 0.05);
  CHECK(r.pressure_l2_rel < 0.01);
  // Pinned to the closed form, so the gauge is nearly aligned already.
  CHECK(std::abs(r.gauge_shift) < 0.01);
  for (const ErrorSample& e : r.samples) {
    CHECK(e.speed_computed == doctest::Approx(e.velocity.norm()));
    CHECK(e.speed_exact == doctest::Approx(1.0 / e.r_speed).epsilon(1e-12));
  }
}

TEST_CASE("weighted_relative_l2") {
  Eigen::VectorXd a(3), b(3), w(3);
  a << 1.0, 2.0, 3.0;
  b << 1.0, 2.0, 4.0;
  w << 1.0, 1.0, 2.0;
  CHECK(weighted_relative_l2(a, b, w) == doctest::Approx(std::sqrt(2.0 / 37.0)));
  CHECK(weighted_relative_l2(a, Eigen::VectorXd::Zero(3), w) == doctest::Approx(std::sqrt(23.0)));
}
