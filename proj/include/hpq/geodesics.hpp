#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hpq/boundary_point.hpp"
#include "hpq/metric.hpp"

namespace hpq {

enum class GeodesicVariant {
  VerticalLine,
  Ellipse,
  Parabola,
  SpacelikeHyperbola,
  TimelikeHyperbola,
  LightlikeSlantLine,
  LightlikeHorizontalLine,
};

const char* to_string(GeodesicVariant v);

/// Closed-form maximal geodesic.
///
/// Non-vertical curves live in the vertical 2-plane over the line
/// basepoint + s * direction, with Euclidean coordinates (s, z), and satisfy
///   kappa s^2 + z^2 + 2 A s = C,  kappa = |u|^2 - |v|^2 for the unit direction.
/// Descriptors are stored in canonical position:
///  - Ellipse and both hyperbolas: basepoint at the center, A = 0.
///  - Parabola: basepoint at the vertex, C = 0, A = -a < 0, i.e. z^2 = 2 a s.
///  - LightlikeSlantLine: basepoint at the foot on {z = 0}, z = slope * s, s >= 0.
///  - LightlikeHorizontalLine: basepoint closest to the origin, z = sqrt(C).
///
/// Conventional parameters (used by evaluate_geodesic and arc_length):
///   VerticalLine         (base, e^t)                          t in R
///   Ellipse              s = a_s cos t, z = sqrt(C) sin t      t in (0, pi)
///   SpacelikeHyperbola   s = branch a_s cosh t, z = sqrt(-C) sinh t, t > 0
///   TimelikeHyperbola    s = a_s sinh t, z = sqrt(C) cosh t    t in R
///   Parabola             s = t^2 / 2a, z = t                   t > 0
///   LightlikeSlantLine   s = 1/t, z = slope / t                t > 0
///   LightlikeHorizontal  s = t, z = sqrt(C)                    t in R
/// with a_s = sqrt(|C / kappa|).
struct GeodesicDescriptor {
  Signature sig;
  GeodesicVariant variant;
  Vector basepoint;
  Vector direction;  // unit; empty for VerticalLine
  double kappa = 0.0;
  double A = 0.0;
  double C = 0.0;
  CausalType causal = CausalType::Spacelike;
  std::optional<double> eccentricity;
  std::array<bool, 2> complete{true, true};  // at the lower and upper parameter end
  int branch = 1;                             // SpacelikeHyperbola only
  double slope = 0.0;                         // LightlikeSlantLine only
};

/// e_S = sqrt(1 + (|v|^2 - |u|^2) / (|u|^2 + |v|^2)).
double eccentricity_spacelike(const Signature& sig, const Vector& direction);
/// e_T = sqrt(1 + (|u|^2 + |v|^2) / (|v|^2 - |u|^2)).
double eccentricity_timelike(const Signature& sig, const Vector& direction);

GeodesicDescriptor classify_geodesic(const HalfSpacePoint& p, const Tangent& v);

/// Open parameter interval of the conventional parameterization.
std::pair<double, double> parameter_domain(const GeodesicDescriptor& d);

HalfSpacePoint evaluate_geodesic(const GeodesicDescriptor& d, double t);
/// d/dt of evaluate_geodesic.
Tangent geodesic_velocity(const GeodesicDescriptor& d, double t);
/// Conventional parameter of a point on the curve.
double parameter_of(const GeodesicDescriptor& d, const HalfSpacePoint& p);

/// Affine parameterization with |g(gamma', gamma')| = 1 (lightlike variants
/// keep their conventional parameter, which is already affine):
///   Ellipse             s = a_s tanh r, z = sqrt(C) sech r          r in R
///   SpacelikeHyperbola  s = branch a_s coth r, z = sqrt(-C) csch r  r > 0
///   TimelikeHyperbola   s = a_s tan r, z = sqrt(C) sec r            |r| < pi/2
///   Parabola            s = e^{2r} / 2a, z = e^r                    r in R
///   VerticalLine        (base, e^r)                                 r in R
std::pair<double, double> affine_domain(const GeodesicDescriptor& d);
HalfSpacePoint evaluate_affine(const GeodesicDescriptor& d, double r);
/// Affine parameter of a point on the curve.
double affine_parameter_of(const GeodesicDescriptor& d, const HalfSpacePoint& p);
/// Samples at `step` over a unit window of the affine parameter, after the
/// homothety that puts the window's reference point at height 1. The window is
/// [-1/2, 1/2] around r = 0 (1.5 for SpacelikeHyperbola, log a for Parabola);
/// for LightlikeSlantLine it is [0, 1] from the point at height 1 toward the
/// foot. Lightlike curves are run at unit Euclidean speed at the reference point.
std::vector<Vector> affine_window_samples(const GeodesicDescriptor& d, double step);

/// Conic residual kappa s^2 + z^2 + 2 A s - C of a point, after projecting
/// onto the descriptor's vertical plane; for VerticalLine the horizontal offset.
double conic_residual(const GeodesicDescriptor& d, const HalfSpacePoint& p);
/// Euclidean distance from p to the descriptor's vertical plane.
double plane_offset(const GeodesicDescriptor& d, const HalfSpacePoint& p);

/// Endpoints at the lower and upper parameter ends; nullopt where the curve
/// leaves the chart through the interior of the pseudo-hyperbolic space.
std::pair<std::optional<BoundaryPoint>, std::optional<BoundaryPoint>> endpoints(
    const GeodesicDescriptor& d);

struct GeodesicConnection {
  std::vector<GeodesicDescriptor> pieces;  // two half-branches for the hyperbola case
};

struct NoGeodesic {
  std::string reason;
};

using GeodesicBetween = std::variant<GeodesicConnection, NoGeodesic>;

GeodesicBetween geodesic_between(const Signature& sig, const BoundaryPoint& b1,
                                 const BoundaryPoint& b2);

/// Length |int sqrt|g(gamma', gamma')| dt| over [t0, t1] in the conventional
/// parameter, by adaptive Gauss-Kronrod quadrature.
double arc_length(const GeodesicDescriptor& d, double t0, double t1);

}  // namespace hpq
