#include "surfflow/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "surfflow/mesh_io.hpp"

namespace surfflow {

void write_speeds_csv(std::ostream& out, const ErrorReport& rep) {
  out << "r,speed_computed,speed_exact\n";
  for (const ErrorSample& s : rep.samples) {
    out << format_double(s.r_speed) << ',' << format_double(s.speed_computed) << ','
        << format_double(s.speed_exact) << '\n';
  }
}

void write_pressures_csv(std::ostream& out, const ErrorReport& rep) {
  out << "r,p_computed,p_exact\n";
  for (const ErrorSample& s : rep.samples) {
    out << format_double(s.r_pressure) << ',' << format_double(s.p_computed) << ','
        << format_double(s.p_exact) << '\n';
  }
}

void write_velocities_csv(std::ostream& out, const ErrorReport& rep) {
  out << "x,y,z,vx,vy,vz\n";
  for (const ErrorSample& s : rep.samples) {
    out << format_double(s.barycenter.x()) << ',' << format_double(s.barycenter.y()) << ','
        << format_double(s.barycenter.z()) << ',' << format_double(s.velocity.x()) << ','
        << format_double(s.velocity.y()) << ',' << format_double(s.velocity.z()) << '\n';
  }
}

std::string quality_json(const QualityReport& q) {
  nlohmann::ordered_json j;
  j["delaunay"] = q.delaunay;
  j["well_centered"] = q.well_centered;
  j["min_angle"] = q.min_angle;
  j["max_angle"] = q.max_angle;
  j["non_delaunay_edges"] = q.non_delaunay_edges;
  j["nonpositive_dual_edges"] = q.nonpositive_dual_edges;
  j["non_acute_triangles"] = q.non_acute_triangles;
  return j.dump(2) + "\n";
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Range {
  double lo = 0.0, hi = 1.0;
};

Range data_range(const std::vector<std::pair<double, double>>& a,
                 const std::vector<std::pair<double, double>>& b, bool use_x) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto* v : {&a, &b}) {
    for (const auto& [x, y] : *v) {
      const double c = use_x ? x : y;
      if (!std::isfinite(c)) continue;
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  if (!std::isfinite(lo)) return {};
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

void write_scatter_svg(std::ostream& out, const ScatterPlot& plot) {
  constexpr double width = 640, height = 480;
  constexpr double left = 80, right = 20, top = 40, bottom = 60;
  const double pw = width - left - right, ph = height - top - bottom;
  const Range xr = data_range(plot.points, plot.curve, true);
  const Range yr = data_range(plot.points, plot.curve, false);
  auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(width / 2) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">"
      << escape(plot.title) << "</text>\n";
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / 5.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    out << "<line x1=\"" << num(sx(xv)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(sx(xv))
        << "\" y2=\"" << num(top + ph + 5) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(sx(xv)) << "\" y=\"" << num(top + ph + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(xv)
        << "</text>\n";
    out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(sy(yv)) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(sy(yv)) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(sy(yv) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << tick_label(yv)
        << "</text>\n";
  }
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 15)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(plot.x_label)
      << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << num(top + ph / 2) << ")\">" << escape(plot.y_label) << "</text>\n";

  out << "<g fill=\"#1f77b4\" fill-opacity=\"0.6\">\n";
  for (const auto& [x, y] : plot.points) {
    if (!std::isfinite(x) || !std::isfinite(y)) continue;
    out << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"2\"/>\n";
  }
  out << "</g>\n";
  if (!plot.curve.empty()) {
    out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : plot.curve) out << num(sx(x)) << ',' << num(sy(y)) << ' ';
    out << "\"/>\n";
  }
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<circle cx=\"" << num(left + pw - 110) << "\" cy=\"" << num(top + 15) << "\" r=\"3\" fill=\"#1f77b4\"/>\n"
      << "<text x=\"" << num(left + pw - 100) << "\" y=\"" << num(top + 19) << "\">computed</text>\n"
      << "<line x1=\"" << num(left + pw - 118) << "\" y1=\"" << num(top + 33) << "\" x2=\""
      << num(left + pw - 102) << "\" y2=\"" << num(top + 33) << "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << num(left + pw - 100) << "\" y=\"" << num(top + 37) << "\">analytic</text>\n"
      << "</g>\n";
  out << "</svg>\n";
}

}  // namespace surfflow
