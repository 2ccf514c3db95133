#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "surfflow/analytic.hpp"
#include "surfflow/darcy.hpp"
#include "surfflow/meshgen.hpp"
#include "surfflow/whitney.hpp"

using namespace surfflow;

namespace {

Eigen::VectorXd constant_form_cochain(const SimplicialSurface& sc, const Point3& c) {
  Eigen::VectorXd w(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) {
    w[e] = c.dot(sc.vertices()[sc.edges()[e].v1] - sc.vertices()[sc.edges()[e].v0]);
  }
  return w;
}

}  // namespace

TEST_CASE("zero cochain interpolates to zero") {
  const SimplicialSurface sc = annulus_mesh({});
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(sc.num_edges());
  for (int t = 0; t < sc.num_triangles(); t += 7) {
    CHECK(whitney_interpolate(sc, zero, t, Eigen::Vector3d(0.2, 0.3, 0.5)).norm() == 0.0);
  }
}

TEST_CASE("constant forms are reproduced exactly") {
  const SimplicialSurface sc = annulus_mesh({});
  const Point3 c(1.3, -0.4, 0.0);
  const Eigen::VectorXd w = constant_form_cochain(sc, c);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < sc.num_triangles(); ++t) {
    double a = u(rng), b = u(rng);
    if (a + b > 1.0) { a = 1.0 - a; b = 1.0 - b; }
    const Point3 v = whitney_interpolate(sc, w, t, Eigen::Vector3d(a, b, 1.0 - a - b));
    CHECK((v - c).norm() < 1e-13 * c.norm() * 10);
  }
}

TEST_CASE("edge integrals of the interpolant recover the cochain") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n(0.0, 1.0);
  const auto rule = oracle::gauss_legendre_01(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = oracle::random_planar_triangle(rng);
    const SimplicialSurface sc = build_complex({t[0], t[1], t[2]}, {{0, 1, 2}});
    Eigen::VectorXd c(3);
    c << n(rng), n(rng), n(rng);
    for (int e = 0; e < 3; ++e) {
      const Edge& edge = sc.edges()[e];
      const Point3 a = sc.vertices()[edge.v0], b = sc.vertices()[edge.v1];
      double integral = 0.0;
      for (const auto& [s, w] : rule) {
        Eigen::Vector3d bary = Eigen::Vector3d::Zero();
        bary[edge.v0] = 1.0 - s;
        bary[edge.v1] = s;
        integral += w * whitney_interpolate(sc, c, 0, bary).dot(b - a);
      }
      CHECK(integral == doctest::Approx(c[e]).epsilon(1e-10));
    }
  }
}

TEST_CASE("interpolation is linear in the cochain") {
  const SimplicialSurface sc = hemisphere_mesh({});
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::VectorXd a(sc.num_edges()), b(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) { a[e] = n(rng); b[e] = n(rng); }
  const Eigen::Vector3d bary(0.1, 0.6, 0.3);
  for (int t = 0; t < sc.num_triangles(); t += 5) {
    const Point3 lhs = whitney_interpolate(sc, 2.0 * a - 3.0 * b, t, bary);
    const Point3 rhs = 2.0 * whitney_interpolate(sc, a, t, bary) - 3.0 * whitney_interpolate(sc, b, t, bary);
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("exact annulus flux gives outward velocity of the right speed") {
  const AnnulusProblem prob;
  const SimplicialSurface sc = refine(annulus_mesh({1.0, 2.0, 4, 24}), 3);
  REQUIRE(sc.num_triangles() >= 12000);
  const DualMetrics m = compute_metrics(sc);
  const std::vector<Point3> v = velocity_from_flux(sc, exact_flux_cochain(sc, prob), m);
  double worst = 0.0;
  for (int t = 0; t < sc.num_triangles(); ++t) {
    const Point3 radial = Point3(m.barycenter[t].x(), m.barycenter[t].y(), 0.0).normalized();
    worst = std::max(worst, std::acos(std::clamp(v[t].normalized().dot(radial), -1.0, 1.0)));
  }
  CHECK(worst < 2.0 * std::numbers::pi / 180.0);
}

TEST_CASE("velocity has the magnitude of the flux proxy and flips with orientation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    const Eigen::Matrix3d rot = oracle::random_rotation(rng);
    const Point3 n = rot.col(2);
    const Point3 w = rot.col(0) * 1.7 + rot.col(1) * -0.4;
    const Point3 v = flux_to_velocity(w, n);
    CHECK(v.norm() == doctest::Approx(w.norm()).epsilon(1e-14));
    CHECK(std::abs(v.dot(w)) < 1e-14);
    CHECK(std::abs(v.dot(n)) < 1e-14);
    CHECK((flux_to_velocity(w, -n) + v).norm() < 1e-15);
  }
}

TEST_CASE("interpolation rejects bad input") {
  const SimplicialSurface sc = annulus_mesh({});
  const Eigen::VectorXd w = Eigen::VectorXd::Zero(sc.num_edges());
  CHECK_THROWS_AS(whitney_interpolate(sc, w, 0, Eigen::Vector3d(0.5, 0.6, 0.1)), InvalidBarycentric);
  CHECK_THROWS_AS(whitney_interpolate(sc, w, 0, Eigen::Vector3d(-0.1, 0.6, 0.5)), InvalidBarycentric);
  CHECK_THROWS_AS(whitney_interpolate(sc, Eigen::VectorXd::Zero(3), 0, Eigen::Vector3d(0.2, 0.3, 0.5)),
                  DimensionMismatch);
  CHECK_THROWS_AS(whitney_interpolate(sc, w, sc.num_triangles(), Eigen::Vector3d(0.2, 0.3, 0.5)),
                  IndexOutOfRange);
}
