#pragma once

#include <numbers>

#include "surfflow/complex.hpp"

namespace surfflow {

// Planar annulus centred at the origin in z = 0.
struct AnnulusSpec {
  double r0 = 1.0;
  double r1 = 2.0;
  int n_rings = 4;
  int n_sectors = 24;
};

// Unit hemisphere z >= 0 with the polar cap theta < theta0 removed
// (theta is the colatitude, measured from the z-axis).
struct HemisphereSpec {
  double theta0 = std::numbers::pi / 6.0;
  int n_lat = 4;
  int n_lon = 30;
};

void validate(const AnnulusSpec& spec);
void validate(const HemisphereSpec& spec);

// Rings at geometrically spaced radii, alternate rings rotated by half a
// sector; 2 * n_rings * n_sectors counter-clockwise triangles. Inner-ring
// vertices get the lowest ids.
SimplicialSurface annulus_mesh(const AnnulusSpec& spec);

// Latitude/longitude grid uniform in theta on [theta0, pi/2], each quad split
// along its shorter diagonal, outward-facing triangles, vertices on the unit
// sphere. Hole-ring vertices get the lowest ids.
SimplicialSurface hemisphere_mesh(const HemisphereSpec& spec);

enum class Projection { none, unit_sphere };

// 1 -> 4 subdivision through deduplicated edge midpoints. Parent vertices keep
// their ids; midpoint of edge e gets id V + e.
SimplicialSurface quadrisect(const SimplicialSurface& sc, Projection project = Projection::none);

SimplicialSurface refine(const SimplicialSurface& sc, int levels, Projection project = Projection::none);

}  // namespace surfflow
