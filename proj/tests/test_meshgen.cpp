#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "surfflow/geometry.hpp"
#include "surfflow/mesh_io.hpp"
#include "surfflow/meshgen.hpp"

#include <sstream>

using namespace surfflow;

TEST_CASE("smallest annulus") {
  const SimplicialSurface sc = annulus_mesh({1.0, 3.0, 1, 3});
  CHECK(sc.num_triangles() == 6);
  CHECK(sc.num_vertices() == 6);
  CHECK(sc.euler_characteristic() == 0);
}

TEST_CASE("annulus counts, radii and quality") {
  const AnnulusSpec spec;
  const SimplicialSurface sc = annulus_mesh(spec);
  CHECK(sc.num_triangles() == 2 * spec.n_rings * spec.n_sectors);
  CHECK(sc.num_vertices() == (spec.n_rings + 1) * spec.n_sectors);
  for (const Point3& p : sc.vertices()) {
    const double r = std::hypot(p.x(), p.y());
    CHECK(r >= 1.0 - 1e-15);
    CHECK(r <= 2.0 + 1e-15);
    CHECK(p.z() == 0.0);
  }
  const DualMetrics m = compute_metrics(sc);
  const QualityReport q = quality_report(sc, m);
  CHECK(q.delaunay);
  CHECK(q.well_centered);
  for (const Point3& n : m.normal) CHECK(n.z() > 0.0);
  CHECK(sc.boundary_loops().size() == 2);
}

TEST_CASE("hemisphere vertices on the sphere, loops, topology") {
  const HemisphereSpec spec;
  const SimplicialSurface sc = hemisphere_mesh(spec);
  CHECK(sc.num_triangles() == 2 * spec.n_lat * spec.n_lon);
  for (const Point3& p : sc.vertices()) {
    CHECK(std::abs(p.norm() - 1.0) < 1e-15);
    CHECK(p.z() >= 0.0);
  }
  CHECK(sc.euler_characteristic() == 0);
  const auto loops = sc.boundary_loops();
  REQUIRE(loops.size() == 2);
  // The first loop holds the lowest vertex ids: the hole ring near the pole.
  for (int v : loops[0].vertices) {
    CHECK(sc.vertices()[v].z() == doctest::Approx(std::cos(spec.theta0)).epsilon(1e-14));
  }
  for (int v : loops[1].vertices) CHECK(sc.vertices()[v].z() == 0.0);
  const DualMetrics m = compute_metrics(sc);
  for (int t = 0; t < sc.num_triangles(); ++t) CHECK(m.normal[t].dot(m.barycenter[t]) > 0.0);
}

TEST_CASE("quadrisection counts and areas") {
  SimplicialSurface sc = hemisphere_mesh({});
  CHECK(sc.num_triangles() == 240);
  const SimplicialSurface l1 = quadrisect(sc, Projection::unit_sphere);
  const SimplicialSurface l2 = quadrisect(l1, Projection::unit_sphere);
  CHECK(l1.num_triangles() == 960);
  CHECK(l2.num_triangles() == 3840);
  CHECK(l1.num_vertices() == sc.num_vertices() + sc.num_edges());
  CHECK(l1.euler_characteristic() == 0);
  CHECK(l2.euler_characteristic() == 0);
  for (const Point3& p : l2.vertices()) CHECK(std::abs(p.norm() - 1.0) < 1e-15);

  // Planar: each parent splits into four children of a quarter of its area.
  const SimplicialSurface ann = annulus_mesh({});
  const SimplicialSurface ann1 = quadrisect(ann);
  const DualMetrics m0 = compute_metrics(ann), m1 = compute_metrics(ann1);
  for (int t = 0; t < ann.num_triangles(); ++t) {
    for (int c = 0; c < 4; ++c) {
      CHECK(m1.tri_area[4 * t + c] == doctest::Approx(m0.tri_area[t] / 4.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("refinement keeps parent vertices bit-exact") {
  for (const bool sphere : {false, true}) {
    const SimplicialSurface base = sphere ? hemisphere_mesh({}) : annulus_mesh({});
    const SimplicialSurface fine = refine(base, 2, sphere ? Projection::unit_sphere : Projection::none);
    for (int v = 0; v < base.num_vertices(); ++v) CHECK(fine.vertices()[v] == base.vertices()[v]);
  }
}

TEST_CASE("max edge length halves under planar refinement") {
  SimplicialSurface sc = annulus_mesh({});
  double h = max_edge_length(compute_metrics(sc));
  for (int level = 1; level <= 3; ++level) {
    sc = quadrisect(sc);
    const double hn = max_edge_length(compute_metrics(sc));
    CHECK(std::abs(hn - h / 2.0) < 1e-12);
    h = hn;
  }
}

TEST_CASE("generation is deterministic") {
  std::ostringstream a, b;
  write_mesh(a, refine(hemisphere_mesh({}), 1, Projection::unit_sphere));
  write_mesh(b, refine(hemisphere_mesh({}), 1, Projection::unit_sphere));
  CHECK(a.str() == b.str());
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(annulus_mesh({2.0, 1.0, 4, 24}), InvalidSpec);
  CHECK_THROWS_AS(annulus_mesh({1.0, 2.0, 0, 24}), InvalidSpec);
  CHECK_THROWS_AS(annulus_mesh({1.0, 2.0, 4, 2}), InvalidSpec);
  CHECK_THROWS_AS(annulus_mesh({1.0, 2.0, 1, 3}), InvalidSpec);  // inverted triangles
  CHECK_THROWS_AS(annulus_mesh({1.0, 1.01, 4, 24}), InvalidSpec);
  CHECK_THROWS_AS(hemisphere_mesh({0.0, 4, 30}), InvalidSpec);
  CHECK_THROWS_AS(hemisphere_mesh({std::numbers::pi / 6, 4, 2}), InvalidSpec);
}
