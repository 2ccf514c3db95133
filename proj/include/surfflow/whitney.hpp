#pragma once

#include <Eigen/Core>

#include <vector>

#include "surfflow/geometry.hpp"

namespace surfflow {

// Flux 1-cochain: the integral of sigma along each edge in its canonical
// (low -> high vertex id) direction.
using Cochain1 = Eigen::VectorXd;

// Evaluates the Whitney interpolant of `cochain` inside triangle t at the
// given barycentric coordinates. The 1-form is returned as its vector proxy
// in the triangle plane. Throws InvalidBarycentric and DimensionMismatch.
Point3 whitney_interpolate(const SimplicialSurface& sc, const Cochain1& cochain, int t,
                           const Eigen::Vector3d& barycentric);

// Velocity at each barycenter: the interpolated flux proxy w turned a
// quarter turn clockwise about the oriented unit normal n, v = w x n.
std::vector<Point3> velocity_from_flux(const SimplicialSurface& sc, const Cochain1& cochain,
                                       const DualMetrics& metrics);

inline Point3 flux_to_velocity(const Point3& w, const Point3& unit_normal) {
  return w.cross(unit_normal);
}

}  // namespace surfflow
