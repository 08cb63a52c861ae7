#pragma once

#include <cstdint>
#include <variant>

#include "hpq/boundary_point.hpp"
#include "hpq/models.hpp"
#include "hpq/sampling.hpp"

namespace hpq {

/// z = c.
struct HorizontalPlaneHorosphere {
  double c;
};

/// z = c |x.u - y.v + d| with (u, v) null.
struct WedgeHorosphere {
  Vector normal;
  double d;
  double c;
};

/// |h(x - x0, y - y0) + z^2| = 2 c z.
struct PiecewiseQuadricHorosphere {
  Vector center;
  double c;
};

using HorosphereShape =
    std::variant<HorizontalPlaneHorosphere, WedgeHorosphere, PiecewiseQuadricHorosphere>;

struct Horosphere {
  HorosphereShape shape;
  BoundaryPoint point_at_infinity;
};

/// The horosphere with parameter c > 0 centered at a boundary point.
Horosphere horosphere_from(const Signature& sig, const BoundaryPoint& bp, double c);

/// Residual of the defining equation (zero on the horosphere).
double horosphere_residual(const Signature& sig, const Horosphere& h, const Vector& coords);
bool horosphere_contains(const Signature& sig, const Horosphere& h, const HalfSpacePoint& p,
                         double tol);

/// Implicit function (a product of the two branches) for sampling.
ImplicitFunction horosphere_implicit(const Signature& sig, const Horosphere& h);

/// The level set |<embed(P), V>| = |a| of a null vector V.
class LevelSetOracle {
 public:
  LevelSetOracle(const Signature& sig, Vector v, double a);

  const Vector& V() const { return v_; }
  double a() const { return a_; }

  double residual(const HalfSpacePoint& p) const;
  bool contains(const HalfSpacePoint& p, double tol) const;

 private:
  Signature sig_;
  Vector v_;
  double a_;
};

/// The (V, a) whose level set is the given horosphere.
LevelSetOracle level_set_for(const Signature& sig, const Horosphere& h);

struct OrthogonalityReport {
  double max_residual = 0.0;
  int tested = 0;
  int skipped = 0;
};

/// Samples spacelike geodesics ending at the horosphere's point at infinity
/// until `samples` of them meet it (at most 20 * samples draws), locates the
/// intersections by bisection, and reports the largest
/// Euclidean sine between the geodesic's tangent and the flat-metric gradient
/// of the horosphere there. Parallel means orthogonal to the horosphere for g.
OrthogonalityReport orthogonality_residual(const Signature& sig, const Horosphere& h,
                                           int samples, std::uint64_t seed);

}  // namespace hpq
