#include "surfflow/whitney.hpp"

#include <cmath>
#include <string>

namespace surfflow {

namespace {

constexpr double kBarycentricTol = 1e-12;

void check_cochain(const SimplicialSurface& sc, const Cochain1& c) {
  if (c.size() != sc.num_edges()) {
    throw DimensionMismatch("cochain has " + std::to_string(c.size()) + " entries, complex has " +
                            std::to_string(sc.num_edges()) + " edges");
  }
}

Point3 interpolate_unchecked(const SimplicialSurface& sc, const Cochain1& c, int t,
                             const Eigen::Vector3d& lambda) {
  const Triangle& tri = sc.triangles()[t];
  const auto& pts = sc.vertices();
  const Eigen::Matrix3d g = barycentric_gradients<double>(pts[tri[0]], pts[tri[1]], pts[tri[2]]);
  const auto& es = sc.triangle_edges(t);
  const auto& ss = sc.triangle_edge_signs(t);
  Point3 w = Point3::Zero();
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    w += (ss[k] * c[es[k]]) * (lambda[i] * g.col(j) - lambda[j] * g.col(i));
  }
  return w;
}

}  // namespace

Point3 whitney_interpolate(const SimplicialSurface& sc, const Cochain1& cochain, int t,
                           const Eigen::Vector3d& barycentric) {
  check_cochain(sc, cochain);
  if (t < 0 || t >= sc.num_triangles()) {
    throw IndexOutOfRange("triangle id " + std::to_string(t) + " out of range");
  }
  if (!barycentric.allFinite() || barycentric.minCoeff() < -kBarycentricTol ||
      std::abs(barycentric.sum() - 1.0) > kBarycentricTol) {
    throw InvalidBarycentric("barycentric coordinates must be nonnegative and sum to 1");
  }
  return interpolate_unchecked(sc, cochain, t, barycentric);
}

std::vector<Point3> velocity_from_flux(const SimplicialSurface& sc, const Cochain1& cochain,
                                       const DualMetrics& metrics) {
  check_cochain(sc, cochain);
  const Eigen::Vector3d center = Eigen::Vector3d::Constant(1.0 / 3.0);
  std::vector<Point3> v(static_cast<std::size_t>(sc.num_triangles()));
  for (int t = 0; t < sc.num_triangles(); ++t) {
    v[t] = flux_to_velocity(interpolate_unchecked(sc, cochain, t, center), metrics.normal[t]);
  }
  return v;
}

}  // namespace surfflow
