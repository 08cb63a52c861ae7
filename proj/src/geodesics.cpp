#include "hpq/geodesics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hpq/errors.hpp"

namespace hpq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double semi_axis(const GeodesicDescriptor& d) { return std::sqrt(std::abs(d.C / d.kappa)); }

HalfSpacePoint on_plane(const GeodesicDescriptor& d, double s, double z) {
  return HalfSpacePoint(d.sig, Vector(d.basepoint + s * d.direction), z);
}

Tangent plane_tangent(const GeodesicDescriptor& d, double ds, double dz) {
  return Tangent{ds * d.direction, dz};
}

double plane_coordinate(const GeodesicDescriptor& d, const HalfSpacePoint& p) {
  return (p.horizontal() - d.basepoint).dot(d.direction);
}

void check_domain(double t, std::pair<double, double> dom, const char* what) {
  if (!std::isfinite(t) || !(t > dom.first) || !(t < dom.second)) {
    throw DomainError(std::string(what) + ": parameter " + std::to_string(t) +
                      " outside (" + std::to_string(dom.first) + ", " +
                      std::to_string(dom.second) + ")");
  }
}

GeodesicDescriptor make(const Signature& sig, GeodesicVariant variant, Vector base,
                        Vector dir) {
  GeodesicDescriptor d{sig, variant, std::move(base), std::move(dir), 0.0, 0.0, 0.0,
                       CausalType::Spacelike, std::nullopt, {true, true}, 1, 0.0};
  return d;
}

}  // namespace

const char* to_string(GeodesicVariant v) {
  switch (v) {
    case GeodesicVariant::VerticalLine:
      return "VerticalLine";
    case GeodesicVariant::Ellipse:
      return "Ellipse";
    case GeodesicVariant::Parabola:
      return "Parabola";
    case GeodesicVariant::SpacelikeHyperbola:
      return "SpacelikeHyperbola";
    case GeodesicVariant::TimelikeHyperbola:
      return "TimelikeHyperbola";
    case GeodesicVariant::LightlikeSlantLine:
      return "LightlikeSlantLine";
    case GeodesicVariant::LightlikeHorizontalLine:
      return "LightlikeHorizontalLine";
  }
  return "unknown";
}

double eccentricity_spacelike(const Signature& sig, const Vector& direction) {
  const double n2 = direction.squaredNorm();
  if (n2 == 0.0) throw DegenerateInputError("eccentricity of a zero direction");
  const double h = horizontal_form(sig, direction);
  return std::sqrt(1.0 - h / n2);
}

double eccentricity_timelike(const Signature& sig, const Vector& direction) {
  const double n2 = direction.squaredNorm();
  if (n2 == 0.0) throw DegenerateInputError("eccentricity of a zero direction");
  const double h = horizontal_form(sig, direction);
  if (!(h < 0.0)) throw DomainError("timelike eccentricity needs |u| < |v|");
  return std::sqrt(1.0 + n2 / -h);
}

GeodesicDescriptor classify_geodesic(const HalfSpacePoint& p, const Tangent& v) {
  const Signature& sig = p.sig();
  if (v.horizontal.size() != sig.horizontal_dim()) {
    throw DimensionError("classify_geodesic: tangent dimension mismatch");
  }
  const CausalType ct = tangent_causal_type(sig, v);
  const double n = v.horizontal.norm();
  const double vn = std::sqrt(n * n + v.w * v.w);
  const Vector& w0 = p.horizontal();
  const double z = p.z();

  if (ct == CausalType::Lightlike) {
    Vector dir = v.horizontal / n;
    if (std::abs(v.w) <= kCausalTolerance * vn) {
      Vector base = w0 - w0.dot(dir) * dir;
      auto d = make(sig, GeodesicVariant::LightlikeHorizontalLine, std::move(base), dir);
      d.kappa = horizontal_form(sig, d.direction);
      d.C = z * z;
      d.causal = CausalType::Lightlike;
      d.complete = {true, true};
      return d;
    }
    if (v.w < 0.0) dir = -dir;
    const double slope = std::abs(v.w) / n;
    Vector base = w0 - (z / slope) * dir;
    auto d = make(sig, GeodesicVariant::LightlikeSlantLine, std::move(base), dir);
    d.kappa = horizontal_form(sig, d.direction);
    d.slope = slope;
    d.causal = CausalType::Lightlike;
    d.complete = {false, true};
    return d;
  }

  if (n <= 1e-12 * vn) {
    auto d = make(sig, GeodesicVariant::VerticalLine, w0, Vector());
    d.causal = CausalType::Spacelike;
    d.complete = {true, true};
    return d;
  }

  Vector dir = v.horizontal / n;
  const double kappa = horizontal_form(sig, dir);
  double A = -z * v.w / n;
  const double C = z * z;

  if (std::abs(kappa) <= kCausalTolerance) {
    if (A > 0.0) {
      dir = -dir;
      A = -A;
    }
    const double a = -A;
    Vector base = w0 - (C / (2.0 * a)) * dir;
    auto d = make(sig, GeodesicVariant::Parabola, std::move(base), std::move(dir));
    d.kappa = 0.0;
    d.A = -a;
    d.C = 0.0;
    d.causal = CausalType::Spacelike;
    d.eccentricity = 1.0;
    d.complete = {true, true};
    return d;
  }

  const double sc = -A / kappa;
  const double centered = C + A * A / kappa;
  Vector base = w0 + sc * dir;

  if (kappa > 0.0) {
    auto d = make(sig, GeodesicVariant::Ellipse, std::move(base), std::move(dir));
    d.kappa = kappa;
    d.C = centered;
    d.causal = CausalType::Spacelike;
    d.eccentricity = eccentricity_spacelike(sig, d.direction);
    d.complete = {true, true};
    return d;
  }

  if (ct == CausalType::Timelike) {
    if (!(centered > 0.0)) throw NumericalError("timelike hyperbola with C <= 0");
    auto d = make(sig, GeodesicVariant::TimelikeHyperbola, std::move(base), std::move(dir));
    d.kappa = kappa;
    d.C = centered;
    d.causal = CausalType::Timelike;
    d.eccentricity = eccentricity_timelike(sig, d.direction);
    d.complete = {false, false};
    return d;
  }

  if (!(centered < 0.0)) throw NumericalError("spacelike hyperbola with C >= 0");
  auto d = make(sig, GeodesicVariant::SpacelikeHyperbola, std::move(base), std::move(dir));
  d.kappa = kappa;
  d.C = centered;
  d.branch = (-sc >= 0.0) ? 1 : -1;
  d.causal = CausalType::Spacelike;
  d.eccentricity = eccentricity_spacelike(sig, d.direction);
  d.complete = {true, false};
  return d;
}

std::pair<double, double> parameter_domain(const GeodesicDescriptor& d) {
  switch (d.variant) {
    case GeodesicVariant::Ellipse:
      return {0.0, std::numbers::pi};
    case GeodesicVariant::SpacelikeHyperbola:
    case GeodesicVariant::Parabola:
    case GeodesicVariant::LightlikeSlantLine:
      return {0.0, kInf};
    default:
      return {-kInf, kInf};
  }
}

HalfSpacePoint evaluate_geodesic(const GeodesicDescriptor& d, double t) {
  check_domain(t, parameter_domain(d), "evaluate_geodesic");
  switch (d.variant) {
    case GeodesicVariant::VerticalLine:
      return HalfSpacePoint(d.sig, d.basepoint, std::exp(t));
    case GeodesicVariant::Ellipse:
      return on_plane(d, semi_axis(d) * std::cos(t), std::sqrt(d.C) * std::sin(t));
    case GeodesicVariant::SpacelikeHyperbola:
      return on_plane(d, d.branch * semi_axis(d) * std::cosh(t),
                      std::sqrt(-d.C) * std::sinh(t));
    case GeodesicVariant::TimelikeHyperbola:
      return on_plane(d, semi_axis(d) * std::sinh(t), std::sqrt(d.C) * std::cosh(t));
    case GeodesicVariant::Parabola:
      return on_plane(d, t * t / (-2.0 * d.A), t);
    case GeodesicVariant::LightlikeSlantLine:
      return on_plane(d, 1.0 / t, d.slope / t);
    case GeodesicVariant::LightlikeHorizontalLine:
      return on_plane(d, t, std::sqrt(d.C));
  }
  throw DomainError("evaluate_geodesic: unknown variant");
}

Tangent geodesic_velocity(const GeodesicDescriptor& d, double t) {
  check_domain(t, parameter_domain(d), "geodesic_velocity");
  switch (d.variant) {
    case GeodesicVariant::VerticalLine:
      return Tangent{Vector::Zero(d.sig.horizontal_dim()), std::exp(t)};
    case GeodesicVariant::Ellipse:
      return plane_tangent(d, -semi_axis(d) * std::sin(t), std::sqrt(d.C) * std::cos(t));
    case GeodesicVariant::SpacelikeHyperbola:
      return plane_tangent(d, d.branch * semi_axis(d) * std::sinh(t),
                           std::sqrt(-d.C) * std::cosh(t));
    case GeodesicVariant::TimelikeHyperbola:
      return plane_tangent(d, semi_axis(d) * std::cosh(t), std::sqrt(d.C) * std::sinh(t));
    case GeodesicVariant::Parabola:
      return plane_tangent(d, t / (-d.A), 1.0);
    case GeodesicVariant::LightlikeSlantLine:
      return plane_tangent(d, -1.0 / (t * t), -d.slope / (t * t));
    case GeodesicVariant::LightlikeHorizontalLine:
      return plane_tangent(d, 1.0, 0.0);
  }
  throw DomainError("geodesic_velocity: unknown variant");
}

double parameter_of(const GeodesicDescriptor& d, const HalfSpacePoint& p) {
  const double z = p.z();
  if (d.variant == GeodesicVariant::VerticalLine) return std::log(z);
  const double s = plane_coordinate(d, p);
  switch (d.variant) {
    case GeodesicVariant::Ellipse:
      return std::atan2(z / std::sqrt(d.C), s / semi_axis(d));
    case GeodesicVariant::SpacelikeHyperbola:
      return std::asinh(z / std::sqrt(-d.C));
    case GeodesicVariant::TimelikeHyperbola:
      return std::asinh(s / semi_axis(d));
    case GeodesicVariant::Parabola:
      return z;
    case GeodesicVariant::LightlikeSlantLine:
      return d.slope / z;
    case GeodesicVariant::LightlikeHorizontalLine:
      return s;
    default:
      break;
  }
  throw DomainError("parameter_of: unknown variant");
}

std::pair<double, double> affine_domain(const GeodesicDescriptor& d) {
  switch (d.variant) {
    case GeodesicVariant::SpacelikeHyperbola:
    case GeodesicVariant::LightlikeSlantLine:
      return {0.0, kInf};
    case GeodesicVariant::TimelikeHyperbola:
      return {-std::numbers::pi / 2.0, std::numbers::pi / 2.0};
    default:
      return {-kInf, kInf};
  }
}

HalfSpacePoint evaluate_affine(const GeodesicDescriptor& d, double r) {
  check_domain(r, affine_domain(d), "evaluate_affine");
  switch (d.variant) {
    case GeodesicVariant::Ellipse:
      return on_plane(d, semi_axis(d) * std::tanh(r), std::sqrt(d.C) / std::cosh(r));
    case GeodesicVariant::SpacelikeHyperbola:
      return on_plane(d, d.branch * semi_axis(d) / std::tanh(r),
                      std::sqrt(-d.C) / std::sinh(r));
    case GeodesicVariant::TimelikeHyperbola:
      return on_plane(d, semi_axis(d) * std::tan(r), std::sqrt(d.C) / std::cos(r));
    case GeodesicVariant::Parabola:
      return on_plane(d, std::exp(2.0 * r) / (-2.0 * d.A), std::exp(r));
    default:
      return evaluate_geodesic(d, r);
  }
}

double affine_parameter_of(const GeodesicDescriptor& d, const HalfSpacePoint& p) {
  const double z = p.z();
  if (d.variant == GeodesicVariant::VerticalLine || d.variant == GeodesicVariant::Parabola) {
    return std::log(z);
  }
  const double s = plane_coordinate(d, p);
  switch (d.variant) {
    case GeodesicVariant::Ellipse:
      return std::atanh(s / semi_axis(d));
    case GeodesicVariant::SpacelikeHyperbola:
      return std::atanh(semi_axis(d) / (d.branch * s));
    case GeodesicVariant::TimelikeHyperbola:
      return std::atan(s / semi_axis(d));
    default:
      return parameter_of(d, p);
  }
}

std::vector<Vector> affine_window_samples(const GeodesicDescriptor& d, double step) {
  if (!(step > 0.0)) throw InvalidParameterError("affine_window_samples: step must be positive");
  double c = 0.0;
  double lo = -0.5;
  switch (d.variant) {
    case GeodesicVariant::SpacelikeHyperbola:
      c = 1.5;
      break;
    case GeodesicVariant::Parabola:
      c = std::log(-d.A);
      break;
    case GeodesicVariant::LightlikeSlantLine:
      c = d.slope;
      lo = 0.0;
      break;
    default:
      break;
  }
  const Vector x0 = evaluate_affine(d, c).coords();
  const double z0 = x0(x0.size() - 1);
  double rate = 1.0;
  if (d.causal == CausalType::Lightlike) {
    if (d.variant == GeodesicVariant::LightlikeSlantLine) {
      const Vector v = (Vector(d.basepoint.size() + 1) << -d.direction / (c * c), -d.slope / (c * c))
                           .finished();
      rate = z0 / v.norm();
    } else {
      rate = z0;
    }
  }
  const int n = static_cast<int>(std::lround(1.0 / step));
  std::vector<Vector> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    out.push_back(evaluate_affine(d, c + rate * (lo + i * step)).coords() / z0);
  }
  return out;
}

double conic_residual(const GeodesicDescriptor& d, const HalfSpacePoint& p) {
  if (d.variant == GeodesicVariant::VerticalLine) {
    return (p.horizontal() - d.basepoint).norm();
  }
  const double s = plane_coordinate(d, p);
  const double z = p.z();
  switch (d.variant) {
    case GeodesicVariant::LightlikeSlantLine:
      return z - d.slope * s;
    case GeodesicVariant::LightlikeHorizontalLine:
      return z - std::sqrt(d.C);
    default:
      return d.kappa * s * s + z * z + 2.0 * d.A * s - d.C;
  }
}

double plane_offset(const GeodesicDescriptor& d, const HalfSpacePoint& p) {
  const Vector off = p.horizontal() - d.basepoint;
  if (d.variant == GeodesicVariant::VerticalLine) return off.norm();
  return (off - off.dot(d.direction) * d.direction).norm();
}

std::pair<std::optional<BoundaryPoint>, std::optional<BoundaryPoint>> endpoints(
    const GeodesicDescriptor& d) {
  using Opt = std::optional<BoundaryPoint>;
  switch (d.variant) {
    case GeodesicVariant::VerticalLine:
      return {Opt(FiniteBoundary{d.basepoint}), Opt(InfinityPoint{})};
    case GeodesicVariant::Ellipse: {
      const double a = semi_axis(d);
      return {Opt(FiniteBoundary{d.basepoint + a * d.direction}),
              Opt(FiniteBoundary{d.basepoint - a * d.direction})};
    }
    case GeodesicVariant::SpacelikeHyperbola:
      return {Opt(FiniteBoundary{d.basepoint + d.branch * semi_axis(d) * d.direction}),
              std::nullopt};
    case GeodesicVariant::TimelikeHyperbola:
      return {std::nullopt, std::nullopt};
    case GeodesicVariant::Parabola: {
      const double offset = -d.A + horizontal_product(d.sig, d.basepoint, d.direction);
      return {Opt(FiniteBoundary{d.basepoint}),
              Opt(VerticalHyperplane{d.direction, offset})};
    }
    case GeodesicVariant::LightlikeSlantLine:
      return {std::nullopt, Opt(FiniteBoundary{d.basepoint})};
    case GeodesicVariant::LightlikeHorizontalLine: {
      const VerticalHyperplane hp{d.direction,
                                  horizontal_product(d.sig, d.basepoint, d.direction)};
      return {Opt(hp), Opt(hp)};
    }
  }
  throw DomainError("endpoints: unknown variant");
}

namespace {

GeodesicBetween between_finite(const Signature& sig, const Vector& b1, const Vector& b2) {
  const Vector diff = b2 - b1;
  const double n = diff.norm();
  if (n <= 1e-12 * (1.0 + std::max(b1.norm(), b2.norm()))) {
    return NoGeodesic{"coincident boundary points"};
  }
  const Vector dir = diff / n;
  const double kappa = horizontal_form(sig, dir);
  const Vector mid = 0.5 * (b1 + b2);
  const double a = 0.5 * n;
  if (std::abs(kappa) <= kCausalTolerance) {
    return NoGeodesic{"lightlike separation: no geodesic joins the two points"};
  }
  if (kappa > 0.0) {
    auto d = make(sig, GeodesicVariant::Ellipse, mid, dir);
    d.kappa = kappa;
    d.C = kappa * a * a;
    d.causal = CausalType::Spacelike;
    d.eccentricity = eccentricity_spacelike(sig, dir);
    d.complete = {true, true};
    return GeodesicConnection{{d}};
  }
  GeodesicConnection pair;
  for (int branch : {1, -1}) {
    auto d = make(sig, GeodesicVariant::SpacelikeHyperbola, mid, dir);
    d.kappa = kappa;
    d.C = kappa * a * a;
    d.branch = branch;
    d.causal = CausalType::Spacelike;
    d.eccentricity = eccentricity_spacelike(sig, dir);
    d.complete = {true, false};
    pair.pieces.push_back(std::move(d));
  }
  return pair;
}

GeodesicBetween between_finite_hyperplane(const Signature& sig, const Vector& b,
                                          const VerticalHyperplane& hp) {
  const double nn = hp.normal.norm();
  if (!(nn > 0.0)) return NoGeodesic{"hyperplane normal is zero"};
  if (std::abs(horizontal_form(sig, hp.normal)) > kCausalTolerance * nn * nn) {
    return NoGeodesic{"hyperplane normal is not null"};
  }
  Vector dir = hp.normal / nn;
  double a = (hp.offset - horizontal_product(sig, b, hp.normal)) / nn;
  if (std::abs(a) <= 1e-12 * (1.0 + std::abs(hp.offset) / nn + b.norm())) {
    return NoGeodesic{"finite point lies on the hyperplane"};
  }
  if (a < 0.0) {
    a = -a;
    dir = -dir;
  }
  auto d = make(sig, GeodesicVariant::Parabola, b, dir);
  d.kappa = 0.0;
  d.A = -a;
  d.C = 0.0;
  d.causal = CausalType::Spacelike;
  d.eccentricity = 1.0;
  d.complete = {true, true};
  return GeodesicConnection{{d}};
}

}  // namespace

GeodesicBetween geodesic_between(const Signature& sig, const BoundaryPoint& b1,
                                 const BoundaryPoint& b2) {
  for (const BoundaryPoint* bp : {&b1, &b2}) {
    if (const auto* f = std::get_if<FiniteBoundary>(bp)) {
      if (f->w.size() != sig.horizontal_dim()) {
        throw DimensionError("geodesic_between: boundary point dimension mismatch");
      }
    } else if (const auto* h = std::get_if<VerticalHyperplane>(bp)) {
      if (h->normal.size() != sig.horizontal_dim()) {
        throw DimensionError("geodesic_between: hyperplane dimension mismatch");
      }
    }
  }
  const auto* f1 = std::get_if<FiniteBoundary>(&b1);
  const auto* f2 = std::get_if<FiniteBoundary>(&b2);
  if (f1 && f2) return between_finite(sig, f1->w, f2->w);
  if (f1 || f2) {
    const Vector& b = f1 ? f1->w : f2->w;
    const BoundaryPoint& other = f1 ? b2 : b1;
    if (is_infinity(other)) {
      auto d = make(sig, GeodesicVariant::VerticalLine, b, Vector());
      d.causal = CausalType::Spacelike;
      d.complete = {true, true};
      return GeodesicConnection{{d}};
    }
    return between_finite_hyperplane(sig, b, std::get<VerticalHyperplane>(other));
  }
  return NoGeodesic{"no geodesic joins two points of the hyperplane and infinity strata"};
}

double arc_length(const GeodesicDescriptor& d, double t0, double t1) {
  if (d.causal == CausalType::Lightlike) {
    throw ZeroLengthError("arc_length: lightlike geodesics have zero length");
  }
  const auto dom = parameter_domain(d);
  check_domain(t0, dom, "arc_length");
  check_domain(t1, dom, "arc_length");
  if (t0 == t1) return 0.0;
  auto speed = [&d](double t) {
    if (d.variant == GeodesicVariant::TimelikeHyperbola) return 1.0 / std::cosh(t);
    if (d.variant == GeodesicVariant::SpacelikeHyperbola) return 1.0 / std::sinh(t);
    const HalfSpacePoint p = evaluate_geodesic(d, t);
    const Tangent v = geodesic_velocity(d, t);
    return std::sqrt(std::abs(metric_value(p, v, v)));
  };
  const double lo = std::min(t0, t1);
  const double hi = std::max(t0, t1);
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(speed, lo, hi, 20,
                                                                       1e-14);
}

}  // namespace hpq
