#pragma once

#include <vector>

#include "hpq/models.hpp"

namespace hpq {

/// Position and velocity along a curve in the half-space.
struct GeodesicState {
  HalfSpacePoint position;
  Tangent velocity;
};

/// The nonvanishing Christoffel symbols at a point; each is +-1/z.
struct ChristoffelTable {
  double x_xz;  // Gamma^{x_i}_{x_i z}
  double y_yz;  // Gamma^{y_j}_{y_j z}
  double z_xx;  // Gamma^{z}_{x_i x_i}
  double z_yy;  // Gamma^{z}_{y_j y_j}
  double z_zz;  // Gamma^{z}_{z z}
};

/// Derivative of a GeodesicState.
struct StateDerivative {
  Tangent velocity;
  Tangent acceleration;
};

/// g_P(v, w) = (u.u' - v.v' + w w') / z^2.
double metric_value(const HalfSpacePoint& p, const Tangent& v, const Tangent& w);

/// Causal type of a tangent vector; the conformal factor does not matter.
CausalType tangent_causal_type(const Signature& sig, const Tangent& v,
                               double tol = kCausalTolerance);

ChristoffelTable christoffel(const HalfSpacePoint& p);

/// Acceleration of a geodesic with coordinates `pos` = (x, y, z) and velocity `vel`.
Vector geodesic_acceleration(const Signature& sig, const Vector& pos, const Vector& vel);

StateDerivative geodesic_rhs(const GeodesicState& s);

/// Uniformly sampled path returned by the integrator.
struct GeodesicPath {
  std::vector<GeodesicState> samples;
  double step = 0.0;
  bool halted_early = false;
};

inline constexpr double kDefaultZMin = 1e-8;

/// Classical RK4 from (p, v) up to parameter t_end with a uniform step no
/// larger than `step`. Stops before the first sample with z <= z_min.
GeodesicPath integrate_geodesic(const HalfSpacePoint& p, const Tangent& v, double t_end,
                                double step, double z_min = kDefaultZMin);

/// Sup norm of (central second difference - geodesic rhs) over interior
/// samples, velocities taken from central first differences.
double geodesic_residual(const Signature& sig, const std::vector<Vector>& positions,
                         double step);
double geodesic_residual(const GeodesicPath& path);

}  // namespace hpq
