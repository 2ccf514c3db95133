#pragma once

#include <numbers>
#include <variant>

#include "surfflow/complex.hpp"

namespace surfflow {

// Radial flow through a planar annulus: inflow speed S0 at r0, outflow at r1.
struct AnnulusProblem {
  double r0 = 1.0;
  double r1 = 2.0;
  double S0 = 1.0;
  double C0 = 0.0;  // pressure at r0
};

// Meridional flow on the unit hemisphere from the hole at theta0 to the equator.
struct HemisphereProblem {
  double theta0 = std::numbers::pi / 6.0;
  double S0 = 1.0;
  double C0 = 0.0;  // pressure at theta0
};

using AnalyticProblem = std::variant<AnnulusProblem, HemisphereProblem>;

void validate(const AnnulusProblem& prob);
void validate(const HemisphereProblem& prob);

// `strict` accepts only the continuous domain. `extended` accepts any point
// where the closed form is defined (r > 0, 0 < theta < pi); refined meshes
// have boundary vertices on chords slightly outside the continuous domain.
enum class DomainCheck { strict, extended };

double annulus_speed(const AnnulusProblem& prob, double r, DomainCheck check = DomainCheck::strict);
double annulus_pressure(const AnnulusProblem& prob, double r, DomainCheck check = DomainCheck::strict);
double hemisphere_speed(const HemisphereProblem& prob, double theta,
                        DomainCheck check = DomainCheck::strict);
double hemisphere_pressure(const HemisphereProblem& prob, double theta,
                           DomainCheck check = DomainCheck::strict);

// K such that the exact flux 1-form is K dphi: S0 r0 or S0 sin(theta0).
double flux_constant(const AnalyticProblem& prob);
// Total flux through the inflow boundary, 2 pi K.
double inflow_total(const AnalyticProblem& prob);

// Integral of the exact flux along the segment a -> b, K * (phi(b) - phi(a))
// with the azimuth difference wrapped to (-pi, pi]. Throws EdgeThroughAxis
// when both endpoints lie on the z-axis.
double exact_edge_flux(const AnalyticProblem& prob, const Point3& a, const Point3& b);

// Azimuth difference phi(b) - phi(a) in (-pi, pi]; 0 if one endpoint is on the axis.
double azimuth_difference(const Point3& a, const Point3& b);

// Position helpers for sampling: the radial coordinate shown in plots
// (distance from the z-axis, after projection to the sphere for the
// hemisphere) and the closed-form fields at a point.
double plot_radius(const AnalyticProblem& prob, const Point3& p);
double speed_at(const AnalyticProblem& prob, const Point3& p, DomainCheck check = DomainCheck::extended);
double pressure_at(const AnalyticProblem& prob, const Point3& p, DomainCheck check = DomainCheck::extended);
// Unit direction of the exact velocity at p (radial / +theta).
Point3 flow_direction(const AnalyticProblem& prob, const Point3& p);

}  // namespace surfflow
