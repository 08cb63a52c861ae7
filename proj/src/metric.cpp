#include "hpq/metric.hpp"

#include <cmath>
#include <string>

#include <boost/numeric/odeint/stepper/runge_kutta4.hpp>

#include "hpq/errors.hpp"

namespace hpq {

double metric_value(const HalfSpacePoint& p, const Tangent& v, const Tangent& w) {
  const double z = p.z();
  return (horizontal_product(p.sig(), v.horizontal, w.horizontal) + v.w * w.w) / (z * z);
}

CausalType tangent_causal_type(const Signature& sig, const Tangent& v, double tol) {
  if (v.horizontal.size() != sig.horizontal_dim()) {
    throw DimensionError("tangent_causal_type: dimension mismatch");
  }
  const double norm2 = v.horizontal.squaredNorm() + v.w * v.w;
  if (norm2 == 0.0) throw DegenerateInputError("tangent_causal_type: zero vector");
  const double q = horizontal_form(sig, v.horizontal) + v.w * v.w;
  if (q > tol * norm2) return CausalType::Spacelike;
  if (q < -tol * norm2) return CausalType::Timelike;
  return CausalType::Lightlike;
}

ChristoffelTable christoffel(const HalfSpacePoint& p) {
  const double r = 1.0 / p.z();
  return {-r, -r, r, -r, -r};
}

Vector geodesic_acceleration(const Signature& sig, const Vector& pos, const Vector& vel) {
  const int n = sig.horizontal_dim();
  const double z = pos(n);
  const double wz = vel(n);
  Vector acc(n + 1);
  acc.head(n) = (2.0 * wz / z) * vel.head(n);
  acc(n) = -(quadratic_form(sig.horizontal(), vel.head(n)) - wz * wz) / z;
  return acc;
}

StateDerivative geodesic_rhs(const GeodesicState& s) {
  const Signature& sig = s.position.sig();
  const Vector acc =
      geodesic_acceleration(sig, s.position.coords(), s.velocity.coords());
  return {s.velocity, Tangent::from_coords(acc)};
}

namespace {

using State = std::vector<double>;

struct GeodesicSystem {
  Signature sig;

  void operator()(const State& s, State& ds, double) const {
    const int d = sig.dim();
    const Eigen::Map<const Vector> pos(s.data(), d);
    const Eigen::Map<const Vector> vel(s.data() + d, d);
    const Vector acc = geodesic_acceleration(sig, pos, vel);
    for (int i = 0; i < d; ++i) {
      ds[i] = s[d + i];
      ds[d + i] = acc(i);
    }
  }
};

GeodesicState unpack(const Signature& sig, const State& s) {
  const int d = sig.dim();
  const Eigen::Map<const Vector> pos(s.data(), d);
  const Eigen::Map<const Vector> vel(s.data() + d, d);
  return {HalfSpacePoint::from_coords(sig, pos), Tangent::from_coords(vel)};
}

}  // namespace

GeodesicPath integrate_geodesic(const HalfSpacePoint& p, const Tangent& v, double t_end,
                                double step, double z_min) {
  if (!(step > 0.0) || !std::isfinite(t_end)) {
    throw InvalidParameterError("integrate_geodesic: step must be positive and t_end finite");
  }
  const Signature& sig = p.sig();
  if (v.horizontal.size() != sig.horizontal_dim()) {
    throw DimensionError("integrate_geodesic: tangent dimension mismatch");
  }
  const int d = sig.dim();
  const long n = std::max(1L, static_cast<long>(std::ceil(std::abs(t_end) / step - 1e-9)));
  const double h = t_end / static_cast<double>(n);

  State s(2 * d);
  const Vector pos = p.coords();
  const Vector vel = v.coords();
  for (int i = 0; i < d; ++i) {
    s[i] = pos(i);
    s[d + i] = vel(i);
  }

  GeodesicPath path;
  path.step = std::abs(h);
  path.samples.reserve(n + 1);
  path.samples.push_back({p, v});
  if (t_end == 0.0) return path;

  GeodesicSystem system{sig};
  boost::numeric::odeint::runge_kutta4<State> stepper;
  double t = 0.0;
  for (long k = 0; k < n; ++k) {
    stepper.do_step(system, s, t, h);
    t += h;
    for (double c : s) {
      if (!std::isfinite(c)) {
        throw NumericalBlowupError("integrate_geodesic: non-finite state at t = " +
                                   std::to_string(t));
      }
    }
    if (s[d - 1] <= z_min) {
      path.halted_early = true;
      break;
    }
    path.samples.push_back(unpack(sig, s));
  }
  return path;
}

double geodesic_residual(const Signature& sig, const std::vector<Vector>& positions,
                         double step) {
  if (positions.size() < 3) {
    throw InsufficientDataError("geodesic_residual needs at least 3 samples");
  }
  if (!(step > 0.0)) throw InvalidParameterError("geodesic_residual: step must be positive");
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < positions.size(); ++k) {
    const Vector& prev = positions[k - 1];
    const Vector& cur = positions[k];
    const Vector& next = positions[k + 1];
    const Vector vel = (next - prev) / (2.0 * step);
    const Vector acc = (next - 2.0 * cur + prev) / (step * step);
    const Vector rhs = geodesic_acceleration(sig, cur, vel);
    worst = std::max(worst, (acc - rhs).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

double geodesic_residual(const GeodesicPath& path) {
  if (path.samples.size() < 3) {
    throw InsufficientDataError("geodesic_residual needs at least 3 samples");
  }
  std::vector<Vector> pos;
  pos.reserve(path.samples.size());
  for (const auto& s : path.samples) pos.push_back(s.position.coords());
  return geodesic_residual(path.samples.front().position.sig(), pos, path.step);
}

}  // namespace hpq
