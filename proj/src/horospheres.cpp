#include "hpq/horospheres.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "hpq/errors.hpp"
#include "hpq/geodesics.hpp"

namespace hpq {

Horosphere horosphere_from(const Signature& sig, const BoundaryPoint& bp, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidParameterError("horosphere_from: c must be positive");
  }
  validate(sig, bp);
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    return {PiecewiseQuadricHorosphere{f->w, c}, bp};
  }
  if (const auto* hp = std::get_if<VerticalHyperplane>(&bp)) {
    return {WedgeHorosphere{hp->normal, -hp->offset, c}, bp};
  }
  return {HorizontalPlaneHorosphere{c}, bp};
}

double horosphere_residual(const Signature& sig, const Horosphere& h, const Vector& coords) {
  const int n = sig.horizontal_dim();
  if (coords.size() != sig.dim()) throw DimensionError("horosphere_residual: dimension");
  const Vector w = coords.head(n);
  const double z = coords(n);
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) return z - pl->c;
  if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    return z - wd->c * std::abs(horizontal_product(sig, w, wd->normal) + wd->d);
  }
  const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
  return std::abs(horizontal_form(sig, Vector(w - pq.center)) + z * z) - 2.0 * pq.c * z;
}

bool horosphere_contains(const Signature& sig, const Horosphere& h, const HalfSpacePoint& p,
                         double tol) {
  return std::abs(horosphere_residual(sig, h, p.coords())) <= tol;
}

ImplicitFunction horosphere_implicit(const Signature& sig, const Horosphere& h) {
  const int n = sig.horizontal_dim();
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    return [n, c = pl->c](const Vector& x) { return x(n) - c; };
  }
  if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    return [sig, n, wd = *wd](const Vector& x) {
      const double l = wd.c * (horizontal_product(sig, x.head(n), wd.normal) + wd.d);
      return x(n) * x(n) - l * l;
    };
  }
  const auto pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
  return [sig, n, pq](const Vector& x) {
    const double z = x(n);
    const double f = horizontal_form(sig, Vector(x.head(n) - pq.center)) + z * z;
    return f * f - 4.0 * pq.c * pq.c * z * z;
  };
}

LevelSetOracle::LevelSetOracle(const Signature& sig, Vector v, double a)
    : sig_(sig), v_(std::move(v)), a_(a) {
  if (v_.size() != sig_.ambient_dim()) throw DimensionError("LevelSetOracle: V dimension");
  const double n2 = v_.squaredNorm();
  if (!(n2 > 0.0)) throw InvalidParameterError("LevelSetOracle: V must be nonzero");
  if (std::abs(quadratic_form(sig_.ambient(), v_)) > 1e-9 * n2) {
    throw InvalidParameterError("LevelSetOracle: V must be null");
  }
  if (a_ == 0.0 || !std::isfinite(a_)) {
    throw InvalidParameterError("LevelSetOracle: a must be nonzero");
  }
}

double LevelSetOracle::residual(const HalfSpacePoint& p) const {
  return std::abs(inner_product(sig_.ambient(), embed_coords(p), v_)) - std::abs(a_);
}

bool LevelSetOracle::contains(const HalfSpacePoint& p, double tol) const {
  return std::abs(residual(p)) <= tol;
}

LevelSetOracle level_set_for(const Signature& sig, const Horosphere& h) {
  Vector v = Vector::Zero(sig.ambient_dim());
  const int ip = sig.index_p();
  const int il = sig.index_last();
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    v(ip) = 1.0;
    v(il) = -1.0;
    return LevelSetOracle(sig, v, 1.0 / pl->c);
  }
  if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    v.head(sig.nx()) = wd->normal.head(sig.nx());
    v(ip) = wd->d;
    v.segment(sig.p(), sig.ny()) = wd->normal.tail(sig.ny());
    v(il) = -wd->d;
    return LevelSetOracle(sig, v, 1.0 / wd->c);
  }
  const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
  const double h0 = horizontal_form(sig, pq.center);
  v.head(sig.nx()) = 2.0 * pq.center.head(sig.nx());
  v(ip) = 1.0 - h0;
  v.segment(sig.p(), sig.ny()) = 2.0 * pq.center.tail(sig.ny());
  v(il) = 1.0 + h0;
  return LevelSetOracle(sig, v, 2.0 * pq.c);
}

namespace {

/// A branch of the horosphere: zero set of `value`, flat-metric gradient `normal`.
struct Branch {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> normal;
};

std::vector<Branch> branches(const Signature& sig, const Horosphere& h) {
  const int n = sig.horizontal_dim();
  std::vector<Branch> out;
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    out.push_back({[n, c = pl->c](const Vector& x) { return x(n) - c; },
                   [n](const Vector&) { return Vector(Vector::Unit(n + 1, n)); }});
    return out;
  }
  if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    for (double sigma : {1.0, -1.0}) {
      out.push_back(
          {[sig, n, wd = *wd, sigma](const Vector& x) {
             return x(n) - sigma * wd.c * (horizontal_product(sig, x.head(n), wd.normal) + wd.d);
           },
           [n, wd = *wd, sigma](const Vector&) {
             Vector g(n + 1);
             g << -sigma * wd.c * wd.normal, 1.0;
             return g;
           }});
    }
    return out;
  }
  const auto pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
  for (double sigma : {1.0, -1.0}) {
    out.push_back({[sig, n, pq, sigma](const Vector& x) {
                     const double z = x(n);
                     return horizontal_form(sig, Vector(x.head(n) - pq.center)) + z * z -
                            sigma * 2.0 * pq.c * z;
                   },
                   [n, pq, sigma](const Vector& x) {
                     Vector g(n + 1);
                     g << x.head(n) - pq.center, x(n) - sigma * pq.c;
                     return g;
                   }});
  }
  return out;
}

double sine_between(const Vector& a, const Vector& b) {
  const Vector ah = a.normalized();
  const Vector bh = b.normalized();
  return (ah - ah.dot(bh) * bh).norm();
}

std::vector<double> scan_nodes(const GeodesicDescriptor& d, double c) {
  const int count = 4000;
  std::vector<double> t(count);
  auto linear = [&](double lo, double hi) {
    for (int i = 0; i < count; ++i) t[i] = lo + (hi - lo) * i / (count - 1);
  };
  auto logarithmic = [&](double lo, double hi) {
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < count; ++i) t[i] = std::exp(a + (b - a) * i / (count - 1));
  };
  switch (d.variant) {
    case GeodesicVariant::VerticalLine:
      linear(std::log(c) - 8.0, std::log(c) + 8.0);
      break;
    case GeodesicVariant::Ellipse:
      linear(1e-7, std::numbers::pi - 1e-7);
      break;
    case GeodesicVariant::SpacelikeHyperbola:
      logarithmic(1e-7, 12.0);
      break;
    default:
      logarithmic(1e-7, 1e4);
      break;
  }
  return t;
}

/// Roots of branch.value along the curve, refined by bisection.
std::vector<double> crossings(const GeodesicDescriptor& d, const Branch& br, double c) {
  const auto nodes = scan_nodes(d, c);
  auto f = [&](double t) { return br.value(evaluate_geodesic(d, t).coords()); };
  std::vector<double> roots;
  double prev = f(nodes[0]);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double cur = f(nodes[i]);
    if ((prev < 0.0) != (cur < 0.0) && std::isfinite(prev) && std::isfinite(cur)) {
      double lo = nodes[i - 1];
      double hi = nodes[i];
      double flo = prev;
      for (int it = 0; it < 200 && hi > lo; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev = cur;
  }
  return roots;
}

}  // namespace

OrthogonalityReport orthogonality_residual(const Signature& sig, const Horosphere& h,
                                           int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidParameterError("orthogonality_residual: samples >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-2.0, 2.0);
  const int n = sig.horizontal_dim();
  auto random_point = [&] {
    Vector b(n);
    for (int i = 0; i < n; ++i) b(i) = unit(rng);
    return b;
  };
  double c = 1.0;
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) c = pl->c;
  const auto brs = branches(sig, h);

  OrthogonalityReport report;
  for (int k = 0; k < 20 * samples && report.tested < samples; ++k) {
    const BoundaryPoint other = FiniteBoundary{random_point()};
    const GeodesicBetween gb = geodesic_between(sig, h.point_at_infinity, other);
    const auto* conn = std::get_if<GeodesicConnection>(&gb);
    if (conn == nullptr) {
      ++report.skipped;
      continue;
    }
    const GeodesicDescriptor* curve = nullptr;
    for (const auto& piece : conn->pieces) {
      const auto ends = endpoints(piece);
      for (const auto& e : {ends.first, ends.second}) {
        if (e && same_boundary_point(sig, *e, h.point_at_infinity, 1e-9)) curve = &piece;
      }
    }
    if (curve == nullptr) {
      ++report.skipped;
      continue;
    }
    bool hit = false;
    for (const auto& br : brs) {
      for (double t : crossings(*curve, br, c)) {
        const Vector x = evaluate_geodesic(*curve, t).coords();
        const Vector vel = geodesic_velocity(*curve, t).coords();
        report.max_residual = std::max(report.max_residual, sine_between(vel, br.normal(x)));
        hit = true;
      }
    }
    if (hit) {
      ++report.tested;
    } else {
      ++report.skipped;
    }
  }
  return report;
}

}  // namespace hpq
