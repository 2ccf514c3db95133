#include "surfflow/analytic.hpp"

#include <cmath>
#include <string>

namespace surfflow {

namespace {

using std::numbers::pi;

void check_radius(const AnnulusProblem& prob, double r, DomainCheck check) {
  const bool ok = check == DomainCheck::strict ? (r >= prob.r0 && r <= prob.r1) : (r > 0.0);
  if (!ok || !std::isfinite(r)) {
    throw OutOfDomain("r = " + std::to_string(r) + " is outside the annulus [" +
                      std::to_string(prob.r0) + ", " + std::to_string(prob.r1) + "]");
  }
}

void check_colatitude(const HemisphereProblem& prob, double theta, DomainCheck check) {
  const bool ok = check == DomainCheck::strict ? (theta >= prob.theta0 && theta <= pi / 2.0)
                                               : (theta > 0.0 && theta < pi);
  if (!ok || !std::isfinite(theta)) {
    throw OutOfDomain("theta = " + std::to_string(theta) + " is outside [" +
                      std::to_string(prob.theta0) + ", pi/2]");
  }
}

// theta of the point's projection onto the unit sphere.
double colatitude(const Point3& p) { return std::atan2(std::hypot(p.x(), p.y()), p.z()); }

}  // namespace

void validate(const AnnulusProblem& prob) {
  if (!(prob.r0 > 0.0) || !(prob.r1 > prob.r0)) throw InvalidSpec("annulus problem needs 0 < r0 < r1");
}

void validate(const HemisphereProblem& prob) {
  if (!(prob.theta0 > 0.0) || !(prob.theta0 < pi / 2.0)) {
    throw InvalidSpec("hemisphere problem needs 0 < theta0 < pi/2");
  }
}

double annulus_speed(const AnnulusProblem& prob, double r, DomainCheck check) {
  check_radius(prob, r, check);
  return prob.S0 * prob.r0 / r;
}

double annulus_pressure(const AnnulusProblem& prob, double r, DomainCheck check) {
  check_radius(prob, r, check);
  // p = -S0 r0 ln r + C with C = C0 + S0 r0 ln r0.
  const double c = prob.C0 + prob.S0 * prob.r0 * std::log(prob.r0);
  return -prob.S0 * prob.r0 * std::log(r) + c;
}

double hemisphere_speed(const HemisphereProblem& prob, double theta, DomainCheck check) {
  check_colatitude(prob, theta, check);
  return prob.S0 * std::sin(prob.theta0) / std::sin(theta);
}

double hemisphere_pressure(const HemisphereProblem& prob, double theta, DomainCheck check) {
  check_colatitude(prob, theta, check);
  const double k = prob.S0 * std::sin(prob.theta0);
  const double c = -k * std::log((1.0 + std::cos(prob.theta0)) / std::sin(prob.theta0)) + prob.C0;
  return k * std::log((1.0 + std::cos(theta)) / std::sin(theta)) + c;
}

double flux_constant(const AnalyticProblem& prob) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AnnulusProblem>) {
          return p.S0 * p.r0;
        } else {
          return p.S0 * std::sin(p.theta0);
        }
      },
      prob);
}

double inflow_total(const AnalyticProblem& prob) { return 2.0 * pi * flux_constant(prob); }

double azimuth_difference(const Point3& a, const Point3& b) {
  const double cross = a.x() * b.y() - a.y() * b.x();
  const double dot = a.x() * b.x() + a.y() * b.y();
  double d = std::atan2(cross, dot);
  if (d == -pi) d = pi;
  return d;
}

double exact_edge_flux(const AnalyticProblem& prob, const Point3& a, const Point3& b) {
  if (a.x() == 0.0 && a.y() == 0.0 && b.x() == 0.0 && b.y() == 0.0) {
    throw EdgeThroughAxis("edge lies on the z-axis; azimuth undefined at both endpoints");
  }
  return flux_constant(prob) * azimuth_difference(a, b);
}

double plot_radius(const AnalyticProblem& prob, const Point3& p) {
  if (std::holds_alternative<AnnulusProblem>(prob)) return std::hypot(p.x(), p.y());
  return std::sin(colatitude(p));
}

double speed_at(const AnalyticProblem& prob, const Point3& p, DomainCheck check) {
  if (const auto* a = std::get_if<AnnulusProblem>(&prob)) {
    return annulus_speed(*a, std::hypot(p.x(), p.y()), check);
  }
  return hemisphere_speed(std::get<HemisphereProblem>(prob), colatitude(p), check);
}

double pressure_at(const AnalyticProblem& prob, const Point3& p, DomainCheck check) {
  if (const auto* a = std::get_if<AnnulusProblem>(&prob)) {
    return annulus_pressure(*a, std::hypot(p.x(), p.y()), check);
  }
  return hemisphere_pressure(std::get<HemisphereProblem>(prob), colatitude(p), check);
}

Point3 flow_direction(const AnalyticProblem& prob, const Point3& p) {
  const double rho = std::hypot(p.x(), p.y());
  const Point3 radial(p.x() / rho, p.y() / rho, 0.0);
  if (std::holds_alternative<AnnulusProblem>(prob)) return radial;
  const double theta = colatitude(p);
  // theta-hat = (cos theta cos phi, cos theta sin phi, -sin theta)
  return Point3(std::cos(theta) * radial.x(), std::cos(theta) * radial.y(), -std::sin(theta));
}

}  // namespace surfflow
