#pragma once

#include "hpq/boundary_point.hpp"
#include "hpq/forms.hpp"

namespace hpq {

/// Point (x, y, z) of the half-space model, z > 0.
class HalfSpacePoint {
 public:
  HalfSpacePoint(const Signature& sig, Vector horizontal, double z);
  HalfSpacePoint(const Signature& sig, const Vector& x, const Vector& y, double z);

  const Signature& sig() const { return sig_; }
  const Vector& horizontal() const { return w_; }
  double z() const { return z_; }

  Vector x() const { return w_.head(sig_.nx()); }
  Vector y() const { return w_.tail(sig_.ny()); }

  /// (x, y, z) as one vector.
  Vector coords() const;
  static HalfSpacePoint from_coords(const Signature& sig, const Vector& c);

 private:
  Signature sig_;
  Vector w_;
  double z_;
};

/// Tangent vector (u, v, w) at a half-space point.
struct Tangent {
  Vector horizontal;  // stacked (u, v)
  double w = 0.0;

  Vector coords() const;
  static Tangent from_coords(const Vector& c);
};

/// Point of the double cover <X, X> = -1 in R^{p,q+1}.
class HyperboloidPoint {
 public:
  /// Rescales X onto the hyperboloid; throws InvalidPointError if <X,X> >= 0.
  HyperboloidPoint(const Signature& sig, Vector coords);

  const Vector& coords() const { return x_; }
  const Signature& sig() const { return sig_; }

 private:
  Signature sig_;
  Vector x_;
};

/// A point of RP^{p+q}, stored with unit Euclidean norm and its first
/// coordinate above 1e-12 in absolute value made positive.
class ProjectivePoint {
 public:
  ProjectivePoint(const Signature& sig, const Vector& coords);

  const Vector& coords() const { return x_; }
  const Signature& sig() const { return sig_; }
  bool is_null(double tol = 1e-12) const;

 private:
  Signature sig_;
  Vector x_;
};

bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol);

/// h(x, y) = |x|^2 - |y|^2 on stacked horizontal vectors.
double horizontal_form(const Signature& sig, const Vector& w);
double horizontal_product(const Signature& sig, const Vector& a, const Vector& b);

/// The isometric embedding of the half-space into the hyperboloid.
HyperboloidPoint embed(const HalfSpacePoint& p);

/// Unnormalized embedding coordinates (the same formulas as `embed`).
Vector embed_coords(const HalfSpacePoint& p);

/// Pushforward of a tangent vector under the embedding.
Vector embed_differential(const HalfSpacePoint& p, const Tangent& v);

/// Inverse of `embed` on the sheet X_p + X_{p+q+1} > 0.
HalfSpacePoint unembed(const HyperboloidPoint& x);
/// Same, from raw coordinates; the chart condition is tested before the norm.
HalfSpacePoint unembed(const Signature& sig, const Vector& coords);

ProjectivePoint boundary_to_projective(const Signature& sig, const BoundaryPoint& bp);

/// Inverse of `boundary_to_projective` on null projective points.
BoundaryPoint projective_to_boundary(const ProjectivePoint& v, double tol = 1e-10);

}  // namespace hpq
