#include "hpq/models.hpp"

#include <cmath>
#include <string>

#include "hpq/errors.hpp"

namespace hpq {

namespace {

void check_horizontal(const Signature& sig, const Vector& w, const char* what) {
  if (w.size() != sig.horizontal_dim()) {
    throw DimensionError(std::string(what) + ": expected horizontal dimension " +
                         std::to_string(sig.horizontal_dim()) + ", got " +
                         std::to_string(w.size()));
  }
}

Vector stack(const Vector& x, const Vector& y) {
  Vector w(x.size() + y.size());
  w << x, y;
  return w;
}

}  // namespace

HalfSpacePoint::HalfSpacePoint(const Signature& sig, Vector horizontal, double z)
    : sig_(sig), w_(std::move(horizontal)), z_(z) {
  check_horizontal(sig_, w_, "HalfSpacePoint");
  if (!(z_ > 0.0) || !std::isfinite(z_) || !w_.allFinite()) {
    throw InvalidPointError("HalfSpacePoint requires finite coordinates and z > 0");
  }
}

HalfSpacePoint::HalfSpacePoint(const Signature& sig, const Vector& x, const Vector& y,
                               double z)
    : HalfSpacePoint(sig, stack(x, y), z) {
  if (x.size() != sig.nx() || y.size() != sig.ny()) {
    throw DimensionError("HalfSpacePoint: x/y lengths do not match the signature");
  }
}

Vector HalfSpacePoint::coords() const {
  Vector c(sig_.dim());
  c << w_, z_;
  return c;
}

HalfSpacePoint HalfSpacePoint::from_coords(const Signature& sig, const Vector& c) {
  if (c.size() != sig.dim()) {
    throw DimensionError("HalfSpacePoint::from_coords: dimension mismatch");
  }
  return HalfSpacePoint(sig, Vector(c.head(sig.horizontal_dim())), c(sig.dim() - 1));
}

Vector Tangent::coords() const {
  Vector c(horizontal.size() + 1);
  c << horizontal, w;
  return c;
}

Tangent Tangent::from_coords(const Vector& c) {
  return Tangent{c.head(c.size() - 1), c(c.size() - 1)};
}

HyperboloidPoint::HyperboloidPoint(const Signature& sig, Vector coords)
    : sig_(sig), x_(std::move(coords)) {
  if (x_.size() != sig_.ambient_dim()) {
    throw DimensionError("HyperboloidPoint: expected length " +
                         std::to_string(sig_.ambient_dim()));
  }
  const double q = quadratic_form(sig_.ambient(), x_);
  if (!(q < 0.0)) {
    throw InvalidPointError("HyperboloidPoint: <X,X> must be negative");
  }
  if (std::abs(q + 1.0) > 1e-12 * (1.0 + x_.squaredNorm())) {
    x_ /= std::sqrt(-q);
  }
}

ProjectivePoint::ProjectivePoint(const Signature& sig, const Vector& coords)
    : sig_(sig), x_(coords) {
  if (x_.size() != sig_.ambient_dim()) {
    throw DimensionError("ProjectivePoint: expected length " +
                         std::to_string(sig_.ambient_dim()));
  }
  const double n = x_.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateInputError("ProjectivePoint: zero or non-finite vector");
  }
  x_ /= n;
  for (Eigen::Index i = 0; i < x_.size(); ++i) {
    if (std::abs(x_(i)) > 1e-12) {
      if (x_(i) < 0.0) x_ = -x_;
      break;
    }
  }
}

bool ProjectivePoint::is_null(double tol) const {
  return std::abs(quadratic_form(sig_.ambient(), x_)) <= tol;
}

bool approx_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  if (!(a.sig() == b.sig())) return false;
  const double plus = (a.coords() - b.coords()).lpNorm<Eigen::Infinity>();
  const double minus = (a.coords() + b.coords()).lpNorm<Eigen::Infinity>();
  return std::min(plus, minus) <= tol;
}

double horizontal_form(const Signature& sig, const Vector& w) {
  return quadratic_form(sig.horizontal(), w);
}

double horizontal_product(const Signature& sig, const Vector& a, const Vector& b) {
  return inner_product(sig.horizontal(), a, b);
}

Vector embed_coords(const HalfSpacePoint& p) {
  const Signature& sig = p.sig();
  const double z = p.z();
  const double h = horizontal_form(sig, p.horizontal());
  Vector x(sig.ambient_dim());
  x.head(sig.nx()) = p.x() / z;
  x(sig.index_p()) = (1.0 - h - z * z) / (2.0 * z);
  x.segment(sig.p(), sig.ny()) = p.y() / z;
  x(sig.index_last()) = (1.0 + h + z * z) / (2.0 * z);
  return x;
}

HyperboloidPoint embed(const HalfSpacePoint& p) {
  return HyperboloidPoint(p.sig(), embed_coords(p));
}

Vector embed_differential(const HalfSpacePoint& p, const Tangent& v) {
  const Signature& sig = p.sig();
  check_horizontal(sig, v.horizontal, "embed_differential");
  const double z = p.z();
  const double z2 = z * z;
  const double h = horizontal_form(sig, p.horizontal());
  const Vector x = p.x();
  const Vector y = p.y();
  const Vector du = v.horizontal.head(sig.nx());
  const Vector dv = v.horizontal.tail(sig.ny());
  const int ip = sig.index_p();
  const int il = sig.index_last();

  Vector out = Vector::Zero(sig.ambient_dim());
  // d/dx_i
  out.head(sig.nx()) += du / z;
  out(ip) -= x.dot(du) / z;
  out(il) += x.dot(du) / z;
  // d/dy_j
  out(ip) += y.dot(dv) / z;
  out.segment(sig.p(), sig.ny()) += dv / z;
  out(il) -= y.dot(dv) / z;
  // d/dz
  out.head(sig.nx()) -= v.w * x / z2;
  out(ip) -= v.w * (1.0 - h + z2) / (2.0 * z2);
  out.segment(sig.p(), sig.ny()) -= v.w * y / z2;
  out(il) -= v.w * (1.0 + h - z2) / (2.0 * z2);
  return out;
}

HalfSpacePoint unembed(const HyperboloidPoint& xp) {
  const Signature& sig = xp.sig();
  const Vector& x = xp.coords();
  const double s = x(sig.index_p()) + x(sig.index_last());
  if (!(s > 0.0)) {
    throw OutsideChartError(
        "unembed: X_p + X_{p+q+1} <= 0, the point is not in the half-space chart");
  }
  Vector w(sig.horizontal_dim());
  w.head(sig.nx()) = x.head(sig.nx()) / s;
  w.tail(sig.ny()) = x.segment(sig.p(), sig.ny()) / s;
  return HalfSpacePoint(sig, std::move(w), 1.0 / s);
}

HalfSpacePoint unembed(const Signature& sig, const Vector& coords) {
  if (coords.size() != sig.ambient_dim()) {
    throw DimensionError("unembed: expected length " + std::to_string(sig.ambient_dim()));
  }
  if (!(coords(sig.index_p()) + coords(sig.index_last()) > 0.0)) {
    throw OutsideChartError(
        "unembed: X_p + X_{p+q+1} <= 0, the point is not in the half-space chart");
  }
  return unembed(HyperboloidPoint(sig, coords));
}

ProjectivePoint boundary_to_projective(const Signature& sig, const BoundaryPoint& bp) {
  validate(sig, bp);
  Vector v = Vector::Zero(sig.ambient_dim());
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    const double h = horizontal_form(sig, f->w);
    v.head(sig.nx()) = f->w.head(sig.nx());
    v(sig.index_p()) = (1.0 - h) / 2.0;
    v.segment(sig.p(), sig.ny()) = f->w.tail(sig.ny());
    v(sig.index_last()) = (1.0 + h) / 2.0;
  } else if (const auto* hp = std::get_if<VerticalHyperplane>(&bp)) {
    v.head(sig.nx()) = hp->normal.head(sig.nx());
    v(sig.index_p()) = -hp->offset;
    v.segment(sig.p(), sig.ny()) = hp->normal.tail(sig.ny());
    v(sig.index_last()) = hp->offset;
  } else {
    v(sig.index_p()) = 1.0;
    v(sig.index_last()) = -1.0;
  }
  return ProjectivePoint(sig, v);
}

BoundaryPoint projective_to_boundary(const ProjectivePoint& pv, double tol) {
  const Signature& sig = pv.sig();
  const Vector& v = pv.coords();
  if (!pv.is_null(std::max(tol, 1e-12))) {
    throw InvalidBoundaryError("projective_to_boundary: vector is not null");
  }
  Vector w(sig.horizontal_dim());
  w.head(sig.nx()) = v.head(sig.nx());
  w.tail(sig.ny()) = v.segment(sig.p(), sig.ny());
  const double s = v(sig.index_p()) + v(sig.index_last());
  if (std::abs(s) > tol) {
    return FiniteBoundary{w / s};
  }
  if (w.norm() <= tol) {
    return InfinityPoint{};
  }
  const double d = 0.5 * (v(sig.index_last()) - v(sig.index_p()));
  return VerticalHyperplane{w, d};
}

}  // namespace hpq
