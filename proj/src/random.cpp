#include "hpq/random.hpp"

#include <cmath>

#include "hpq/errors.hpp"
#include "hpq/metric.hpp"

namespace hpq {

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double Rng::normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool Rng::coin() { return integer(0, 1) == 1; }

Vector Rng::uniform_vector(int n, double lo, double hi) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Vector Rng::normal_vector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vector Rng::unit_vector(int n) {
  if (n < 1) throw InvalidParameterError("unit_vector needs n >= 1");
  for (;;) {
    Vector v = normal_vector(n);
    const double len = v.norm();
    if (len > 1e-6) return v / len;
  }
}

HalfSpacePoint random_point(const Signature& sig, Rng& rng, double box, double z_lo,
                            double z_hi) {
  return HalfSpacePoint(sig, rng.uniform_vector(sig.horizontal_dim(), -box, box),
                        rng.uniform(z_lo, z_hi));
}

Tangent random_tangent(const Signature& sig, Rng& rng) {
  for (;;) {
    Tangent t{rng.normal_vector(sig.horizontal_dim()), rng.normal()};
    if (t.horizontal.squaredNorm() + t.w * t.w > 1e-6) return t;
  }
}

Tangent random_tangent_of_type(const Signature& sig, Rng& rng, CausalType type,
                               double margin) {
  const int nx = sig.nx();
  const int ny = sig.ny();
  if (type == CausalType::Lightlike) {
    if (ny == 0) throw DomainError("no lightlike tangents when q = 0");
    Vector h(sig.horizontal_dim());
    const double w = rng.normal();
    const Vector u = rng.normal_vector(nx);
    const double r = std::sqrt(u.squaredNorm() + w * w);
    h << u, rng.unit_vector(ny) * r;
    return {h, w};
  }
  if (type == CausalType::Timelike && ny == 0) {
    throw DomainError("no timelike tangents when q = 0");
  }
  for (;;) {
    const Tangent t = random_tangent(sig, rng);
    const double n2 = t.horizontal.squaredNorm() + t.w * t.w;
    const double q = horizontal_form(sig, t.horizontal) + t.w * t.w;
    if (type == CausalType::Spacelike && q > margin * n2) return t;
    if (type == CausalType::Timelike && q < -margin * n2) return t;
  }
}

bool has_hyperplane_stratum(const Signature& sig) { return sig.nx() > 0 && sig.ny() > 0; }

Vector random_null_direction(const Signature& sig, Rng& rng) {
  if (!has_hyperplane_stratum(sig)) {
    throw DomainError("null horizontal directions need p >= 2 and q >= 1");
  }
  Vector d(sig.horizontal_dim());
  d << rng.unit_vector(sig.nx()), rng.unit_vector(sig.ny());
  return d / std::sqrt(2.0);
}

BoundaryPoint random_boundary_point(const Signature& sig, Rng& rng, Stratum stratum) {
  switch (stratum) {
    case Stratum::Finite:
      return FiniteBoundary{rng.uniform_vector(sig.horizontal_dim(), -2.0, 2.0)};
    case Stratum::Hyperplane:
      return VerticalHyperplane{random_null_direction(sig, rng) * rng.uniform(0.5, 2.0),
                                rng.uniform(-2.0, 2.0)};
    case Stratum::Infinity:
      return InfinityPoint{};
  }
  return InfinityPoint{};
}

IsometryG random_isometry(const Signature& sig, Rng& rng, bool reflections) {
  const int n = sig.horizontal_dim();
  Matrix s = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      s(i, j) = rng.uniform(-0.5, 0.5);
      s(j, i) = -s(i, j);
    }
  }
  Matrix a = indefinite_orthogonal_exp(sig, s);
  if (reflections) {
    for (int i = 0; i < n; ++i) {
      if (rng.coin()) a.col(i) *= -1.0;
    }
  }
  return make_isometry(sig, rng.uniform(0.5, 2.0), a, rng.uniform_vector(n, -2.0, 2.0));
}

}  // namespace hpq
