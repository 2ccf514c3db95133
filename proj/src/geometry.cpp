#include "surfflow/geometry.hpp"

#include <numbers>
#include <string>

namespace surfflow {

namespace {

constexpr double kDelaunayTol = 1e-12;
constexpr double kAcuteTol = 1e-12;

}  // namespace

double corner_angle(const SimplicialSurface& sc, int t, int k) {
  const Triangle& tri = sc.triangles()[t];
  const Point3& p = sc.vertices()[tri[k]];
  const Point3 u = sc.vertices()[tri[(k + 1) % 3]] - p;
  const Point3 v = sc.vertices()[tri[(k + 2) % 3]] - p;
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

DualMetrics compute_metrics(const SimplicialSurface& sc) {
  const auto& pts = sc.vertices();
  DualMetrics m;
  m.edge_length.resize(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) {
    m.edge_length[e] = (pts[sc.edges()[e].v1] - pts[sc.edges()[e].v0]).norm();
  }

  const int nt = sc.num_triangles();
  m.tri_area.resize(nt);
  m.circumcenter.resize(nt);
  m.barycenter.resize(nt);
  m.normal.resize(nt);
  m.is_well_centered.assign(nt, 1);
  for (int t = 0; t < nt; ++t) {
    const Triangle& tri = sc.triangles()[t];
    const Point3& p0 = pts[tri[0]];
    const Point3& p1 = pts[tri[1]];
    const Point3& p2 = pts[tri[2]];
    try {
      m.circumcenter[t] = circumcenter<double>(p0, p1, p2);
    } catch (const DegenerateTriangle&) {
      throw DegenerateTriangle("triangle " + std::to_string(t) + " has (near) zero area");
    }
    const Point3 n = (p1 - p0).cross(p2 - p0);
    m.tri_area[t] = n.norm() / 2.0;
    m.normal[t] = n.normalized();
    m.barycenter[t] = (p0 + p1 + p2) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const Point3 u = pts[tri[(k + 1) % 3]] - pts[tri[k]];
      const Point3 v = pts[tri[(k + 2) % 3]] - pts[tri[k]];
      if (u.dot(v) <= kAcuteTol * u.norm() * v.norm()) m.is_well_centered[t] = 0;
    }
  }

  m.dual_edge_length = signed_dual_lengths(sc, m);
  m.is_delaunay.resize(sc.num_edges());
  for (int e = 0; e < sc.num_edges(); ++e) {
    m.is_delaunay[e] = m.dual_edge_length[e] >= -kDelaunayTol * m.edge_length[e] ? 1 : 0;
  }
  return m;
}

Eigen::VectorXd signed_dual_lengths(const SimplicialSurface& sc, const DualMetrics& metrics) {
  const auto& pts = sc.vertices();
  Eigen::VectorXd dual = Eigen::VectorXd::Zero(sc.num_edges());
  for (int t = 0; t < sc.num_triangles(); ++t) {
    const Triangle& tri = sc.triangles()[t];
    const Point3& c = metrics.circumcenter[t];
    const Point3& n = metrics.normal[t];
    for (int k = 0; k < 3; ++k) {
      const Point3& a = pts[tri[(k + 1) % 3]];
      const Point3& b = pts[tri[(k + 2) % 3]];
      // The triangle lies to the left of a -> b, seen from the normal side.
      const Point3 inward = n.cross(b - a).normalized();
      dual[sc.triangle_edges(t)[k]] += (c - 0.5 * (a + b)).dot(inward);
    }
  }
  return dual;
}

QualityReport quality_report(const SimplicialSurface& sc, const DualMetrics& metrics) {
  QualityReport q;
  q.min_angle = std::numbers::pi;
  q.max_angle = 0.0;
  for (int t = 0; t < sc.num_triangles(); ++t) {
    for (int k = 0; k < 3; ++k) {
      const double a = corner_angle(sc, t, k);
      q.min_angle = std::min(q.min_angle, a);
      q.max_angle = std::max(q.max_angle, a);
    }
    if (!metrics.is_well_centered[t]) ++q.non_acute_triangles;
  }
  if (sc.num_triangles() == 0) q.min_angle = 0.0;
  for (int e = 0; e < sc.num_edges(); ++e) {
    if (!metrics.is_delaunay[e]) ++q.non_delaunay_edges;
    if (metrics.dual_edge_length[e] <= 0.0) ++q.nonpositive_dual_edges;
  }
  q.delaunay = q.non_delaunay_edges == 0;
  q.well_centered = q.non_acute_triangles == 0;
  return q;
}

Point3 project_to_unit_sphere(const Point3& p) {
  const double r = p.norm();
  if (r == 0.0) throw OriginPoint("cannot project the origin onto the unit sphere");
  return p / r;
}

std::vector<Point3> project_to_unit_sphere(const std::vector<Point3>& points) {
  std::vector<Point3> out;
  out.reserve(points.size());
  for (const Point3& p : points) out.push_back(project_to_unit_sphere(p));
  return out;
}

double max_edge_length(const DualMetrics& metrics) {
  return metrics.edge_length.size() > 0 ? metrics.edge_length.maxCoeff() : 0.0;
}

}  // namespace surfflow
