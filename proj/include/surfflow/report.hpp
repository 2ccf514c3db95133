#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "surfflow/darcy.hpp"

namespace surfflow {

// CSV writers. Rows follow triangle id order; numbers use the shortest
// round-trip decimal form.
void write_speeds_csv(std::ostream& out, const ErrorReport& rep);     // r,speed_computed,speed_exact
void write_pressures_csv(std::ostream& out, const ErrorReport& rep);  // r,p_computed,p_exact
void write_velocities_csv(std::ostream& out, const ErrorReport& rep); // x,y,z,vx,vy,vz

// Mesh-quality summary as a JSON object.
std::string quality_json(const QualityReport& q);

struct ScatterPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;  // computed samples
  std::vector<std::pair<double, double>> curve;   // closed-form reference
};

// Self-contained SVG: axes, ticks, the reference curve as a polyline and one
// circle per sample.
void write_scatter_svg(std::ostream& out, const ScatterPlot& plot);

}  // namespace surfflow
