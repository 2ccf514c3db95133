#include "surfflow/meshgen.hpp"

#include <cmath>
#include <string>

#include "surfflow/geometry.hpp"

namespace surfflow {

namespace {

using std::numbers::pi;

// Flips triangles whose normal disagrees with `outward(centroid)`.
template <typename Outward>
void orient(const std::vector<Point3>& pts, std::vector<Triangle>& tris, Outward outward) {
  for (Triangle& t : tris) {
    const Point3 n = (pts[t[1]] - pts[t[0]]).cross(pts[t[2]] - pts[t[0]]);
    const Point3 c = (pts[t[0]] + pts[t[1]] + pts[t[2]]) / 3.0;
    if (n.dot(outward(c)) < 0.0) std::swap(t[1], t[2]);
  }
}

}  // namespace

void validate(const AnnulusSpec& s) {
  if (!(s.r0 > 0.0) || !(s.r1 > s.r0) || !std::isfinite(s.r1)) {
    throw InvalidSpec("annulus needs 0 < r0 < r1 (got r0=" + std::to_string(s.r0) +
                      ", r1=" + std::to_string(s.r1) + ")");
  }
  if (s.n_rings < 1 || s.n_sectors < 3) {
    throw InvalidSpec("annulus needs rings >= 1 and sectors >= 3");
  }
  // Offset rings: a vertex of one ring must lie outside the chord joining its
  // two neighbours on the next ring, or the triangle between them inverts.
  const double step = std::pow(s.r1 / s.r0, 1.0 / s.n_rings);
  if (!(step * std::cos(pi / s.n_sectors) > 1.0 + 1e-9)) {
    throw InvalidSpec("annulus rings too close for " + std::to_string(s.n_sectors) +
                      " sectors (need (r1/r0)^(1/rings) * cos(pi/sectors) > 1)");
  }
}

void validate(const HemisphereSpec& s) {
  if (!(s.theta0 > 0.0) || !(s.theta0 < pi / 2.0)) {
    throw InvalidSpec("hemisphere needs 0 < theta0 < pi/2 (got " + std::to_string(s.theta0) + ")");
  }
  if (s.n_lat < 1 || s.n_lon < 3) {
    throw InvalidSpec("hemisphere needs lat >= 1 and lon >= 3");
  }
}

SimplicialSurface annulus_mesh(const AnnulusSpec& spec) {
  validate(spec);
  const int nr = spec.n_rings, ns = spec.n_sectors;
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>((nr + 1) * ns));
  const double ratio = spec.r1 / spec.r0;
  for (int k = 0; k <= nr; ++k) {
    const double r = k == 0 ? spec.r0 : k == nr ? spec.r1 : spec.r0 * std::pow(ratio, double(k) / nr);
    const double offset = (k % 2) * 0.5;
    for (int j = 0; j < ns; ++j) {
      const double phi = 2.0 * pi * (j + offset) / ns;
      pts.emplace_back(r * std::cos(phi), r * std::sin(phi), 0.0);
    }
  }
  auto id = [ns](int k, int j) { return k * ns + (j % ns); };

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(2 * nr * ns));
  for (int k = 0; k < nr; ++k) {
    // The shifted ring's vertex j sits between the other ring's j and j+1.
    const bool outer_shifted = k % 2 == 0;
    for (int j = 0; j < ns; ++j) {
      if (outer_shifted) {
        tris.push_back({id(k, j), id(k, j + 1), id(k + 1, j)});
        tris.push_back({id(k + 1, j), id(k, j + 1), id(k + 1, j + 1)});
      } else {
        tris.push_back({id(k + 1, j), id(k + 1, j + 1), id(k, j)});
        tris.push_back({id(k, j), id(k + 1, j + 1), id(k, j + 1)});
      }
    }
  }
  orient(pts, tris, [](const Point3&) { return Point3::UnitZ(); });
  return build_complex(std::move(pts), std::move(tris));
}

SimplicialSurface hemisphere_mesh(const HemisphereSpec& spec) {
  validate(spec);
  const int nl = spec.n_lat, nphi = spec.n_lon;
  std::vector<Point3> pts;
  pts.reserve(static_cast<std::size_t>((nl + 1) * nphi));
  for (int i = 0; i <= nl; ++i) {
    const double theta = spec.theta0 + (pi / 2.0 - spec.theta0) * i / nl;
    const double st = i == nl ? 1.0 : std::sin(theta);
    const double ct = i == nl ? 0.0 : std::cos(theta);
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * pi * j / nphi;
      pts.push_back(project_to_unit_sphere(Point3(st * std::cos(phi), st * std::sin(phi), ct)));
      if (i == nl) pts.back().z() = 0.0;
    }
  }
  auto id = [nphi](int i, int j) { return i * nphi + (j % nphi); };

  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(2 * nl * nphi));
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < nphi; ++j) {
      const int a = id(i, j), b = id(i, j + 1), c = id(i + 1, j + 1), d = id(i + 1, j);
      const double ac = (pts[c] - pts[a]).norm();
      const double bd = (pts[d] - pts[b]).norm();
      // Lat/long quads are isosceles trapezoids, so the diagonals tie up to
      // rounding; keep a fixed diagonal unless the other is clearly shorter.
      if (bd < ac * (1.0 - 1e-12)) {
        tris.push_back({a, d, b});
        tris.push_back({b, d, c});
      } else {
        tris.push_back({a, d, c});
        tris.push_back({a, c, b});
      }
    }
  }
  orient(pts, tris, [](const Point3& c) { return c; });
  return build_complex(std::move(pts), std::move(tris));
}

SimplicialSurface quadrisect(const SimplicialSurface& sc, Projection project) {
  const int nv = sc.num_vertices();
  std::vector<Point3> pts = sc.vertices();
  pts.reserve(static_cast<std::size_t>(nv + sc.num_edges()));
  for (const Edge& e : sc.edges()) {
    Point3 m = 0.5 * (sc.vertices()[e.v0] + sc.vertices()[e.v1]);
    if (project == Projection::unit_sphere) m = project_to_unit_sphere(m);
    pts.push_back(m);
  }
  std::vector<Triangle> tris;
  tris.reserve(static_cast<std::size_t>(4 * sc.num_triangles()));
  for (int t = 0; t < sc.num_triangles(); ++t) {
    const Triangle& tri = sc.triangles()[t];
    // Midpoint opposite local vertex k.
    const auto& es = sc.triangle_edges(t);
    const int m0 = nv + es[0], m1 = nv + es[1], m2 = nv + es[2];
    tris.push_back({tri[0], m2, m1});
    tris.push_back({m2, tri[1], m0});
    tris.push_back({m1, m0, tri[2]});
    tris.push_back({m0, m1, m2});
  }
  return build_complex(std::move(pts), std::move(tris));
}

SimplicialSurface refine(const SimplicialSurface& sc, int levels, Projection project) {
  SimplicialSurface out = sc;
  for (int l = 0; l < levels; ++l) out = quadrisect(out, project);
  return out;
}

}  // namespace surfflow
