#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <vector>

#include "surfflow/complex.hpp"

namespace surfflow {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

// Relative area threshold below which a triangle is treated as degenerate.
inline constexpr double kDegenerateAreaTol = 1e-14;

// Circumcenter of a triangle in R^3, lying in the triangle's own plane.
template <typename Scalar>
Vec3<Scalar> circumcenter(const Vec3<Scalar>& p0, const Vec3<Scalar>& p1, const Vec3<Scalar>& p2) {
  const Vec3<Scalar> a = p1 - p0;
  const Vec3<Scalar> b = p2 - p0;
  const Vec3<Scalar> n = a.cross(b);
  const Scalar n2 = n.squaredNorm();
  const Scalar longest = std::max({a.squaredNorm(), b.squaredNorm(), (p2 - p1).squaredNorm()});
  if (!(std::sqrt(n2) / 2 >= Scalar(kDegenerateAreaTol) * longest) || longest == Scalar(0)) {
    throw DegenerateTriangle("circumcenter of a degenerate triangle");
  }
  return p0 + (a.squaredNorm() * b.cross(n) + b.squaredNorm() * n.cross(a)) / (Scalar(2) * n2);
}

template <typename Scalar>
Scalar triangle_area(const Vec3<Scalar>& p0, const Vec3<Scalar>& p1, const Vec3<Scalar>& p2) {
  return (p1 - p0).cross(p2 - p0).norm() / Scalar(2);
}

// Barycentric coordinates of x with respect to (p0, p1, p2), after projecting
// x into the triangle's plane.
template <typename Scalar>
Vec3<Scalar> barycentric_coordinates(const Vec3<Scalar>& x, const Vec3<Scalar>& p0,
                                     const Vec3<Scalar>& p1, const Vec3<Scalar>& p2) {
  const Vec3<Scalar> n = (p1 - p0).cross(p2 - p0);
  const Scalar n2 = n.squaredNorm();
  const Scalar l0 = (p2 - p1).cross(x - p1).dot(n) / n2;
  const Scalar l1 = (p0 - p2).cross(x - p2).dot(n) / n2;
  return {l0, l1, Scalar(1) - l0 - l1};
}

// Constant gradients of the barycentric coordinates, as columns, in the
// triangle's plane.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> barycentric_gradients(const Vec3<Scalar>& p0, const Vec3<Scalar>& p1,
                                                  const Vec3<Scalar>& p2) {
  const Vec3<Scalar> n = (p1 - p0).cross(p2 - p0);
  const Scalar n2 = n.squaredNorm();
  Eigen::Matrix<Scalar, 3, 3> g;
  g.col(0) = n.cross(p2 - p1) / n2;
  g.col(1) = n.cross(p0 - p2) / n2;
  g.col(2) = n.cross(p1 - p0) / n2;
  return g;
}

// Per-simplex metric data for the circumcentric dual.
struct DualMetrics {
  Eigen::VectorXd edge_length;              // per edge
  Eigen::VectorXd tri_area;                 // per triangle
  std::vector<Point3> circumcenter;         // per triangle
  std::vector<Point3> barycenter;           // per triangle
  std::vector<Point3> normal;               // unit normal, per triangle, from its orientation
  Eigen::VectorXd dual_edge_length;         // signed, per edge
  std::vector<char> is_delaunay;            // per edge: dual length >= -tol * edge length
  std::vector<char> is_well_centered;       // per triangle: all three angles acute
};

// Throws DegenerateTriangle.
DualMetrics compute_metrics(const SimplicialSurface& sc);

// Sum over incident triangles of the signed distance from circumcenter to
// edge midpoint; positive when the circumcenter is on the triangle's side.
Eigen::VectorXd signed_dual_lengths(const SimplicialSurface& sc, const DualMetrics& metrics);

struct QualityReport {
  bool delaunay = true;
  bool well_centered = true;
  double min_angle = 0.0;  // radians
  double max_angle = 0.0;  // radians
  int non_delaunay_edges = 0;
  int nonpositive_dual_edges = 0;
  int non_acute_triangles = 0;
};

QualityReport quality_report(const SimplicialSurface& sc, const DualMetrics& metrics);

// Throws OriginPoint for the zero vector.
Point3 project_to_unit_sphere(const Point3& p);
std::vector<Point3> project_to_unit_sphere(const std::vector<Point3>& points);

// Interior angle of triangle t at local vertex k.
double corner_angle(const SimplicialSurface& sc, int t, int k);

// Longest edge of the mesh.
double max_edge_length(const DualMetrics& metrics);

}  // namespace surfflow
