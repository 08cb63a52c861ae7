#include "hpq/isometries.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "hpq/errors.hpp"

namespace hpq {

namespace {

Matrix horizontal_j(const Signature& sig) {
  return form_diagonal(sig.horizontal()).asDiagonal();
}

void check_g(const Signature& sig, const IsometryG& g) {
  const int n = sig.horizontal_dim();
  if (g.A.rows() != n || g.A.cols() != n || g.t.size() != n) {
    throw DimensionError("IsometryG does not match the signature");
  }
}

}  // namespace

IsometryG make_isometry(const Signature& sig, double lambda, Matrix A, Vector t) {
  IsometryG g{lambda, std::move(A), std::move(t)};
  check_g(sig, g);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidParameterError("IsometryG: lambda must be positive");
  }
  if (!is_indefinite_orthogonal(sig.horizontal(), g.A, 1e-10)) {
    throw InvalidParameterError("IsometryG: A is not in O(p-1, q)");
  }
  return g;
}

IsometryG identity_isometry(const Signature& sig) {
  const int n = sig.horizontal_dim();
  return {1.0, Matrix::Identity(n, n), Vector::Zero(n)};
}

IsometryG translation(const Signature& sig, const Vector& t) {
  IsometryG g = identity_isometry(sig);
  if (t.size() != sig.horizontal_dim()) throw DimensionError("translation: dimension");
  g.t = t;
  return g;
}

IsometryG homothety(const Signature& sig, double lambda) {
  return make_isometry(sig, lambda, Matrix::Identity(sig.horizontal_dim(), sig.horizontal_dim()),
                       Vector::Zero(sig.horizontal_dim()));
}

Matrix indefinite_orthogonal_exp(const Signature& sig, const Matrix& antisymmetric) {
  const int n = sig.horizontal_dim();
  if (antisymmetric.rows() != n || antisymmetric.cols() != n) {
    throw DimensionError("indefinite_orthogonal_exp: dimension");
  }
  if (n == 0) return Matrix(0, 0);
  if ((antisymmetric + antisymmetric.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InvalidParameterError("indefinite_orthogonal_exp: S must be antisymmetric");
  }
  const Matrix x = horizontal_j(sig) * antisymmetric;
  return x.exp();
}

HalfSpacePoint g_apply(const IsometryG& g, const HalfSpacePoint& p) {
  check_g(p.sig(), g);
  return HalfSpacePoint(p.sig(), Vector(g.lambda * (g.A * p.horizontal() + g.t)),
                        g.lambda * p.z());
}

Tangent g_push(const IsometryG& g, const Tangent& v) {
  return Tangent{g.lambda * (g.A * v.horizontal), g.lambda * v.w};
}

IsometryG g_compose(const IsometryG& g1, const IsometryG& g2) {
  return {g1.lambda * g2.lambda, g1.A * g2.A, g1.A * g2.t + g1.t / g2.lambda};
}

IsometryG g_inverse(const Signature& sig, const IsometryG& g) {
  check_g(sig, g);
  const Matrix j = horizontal_j(sig);
  const Matrix ainv = j * g.A.transpose() * j;
  return {1.0 / g.lambda, ainv, -g.lambda * (ainv * g.t)};
}

BoundaryPoint g_boundary_apply(const Signature& sig, const IsometryG& g,
                               const BoundaryPoint& bp) {
  check_g(sig, g);
  validate(sig, bp);
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    return FiniteBoundary{g.lambda * (g.A * f->w + g.t)};
  }
  if (const auto* hp = std::get_if<VerticalHyperplane>(&bp)) {
    const Vector n = g.A * hp->normal;
    return VerticalHyperplane{n, g.lambda * (hp->offset + horizontal_product(sig, n, g.t))};
  }
  return InfinityPoint{};
}

double mu(const HalfSpacePoint& p) {
  const double z2 = p.z() * p.z();
  const double den = horizontal_form(p.sig(), p.horizontal()) + z2;
  if (std::abs(den) <= 1e-12 * (p.horizontal().squaredNorm() + z2)) {
    throw OnLightconeError("mu: the point lies on the lightcone of the origin");
  }
  return 1.0 / den;
}

HalfSpacePoint inversion_apply(const HalfSpacePoint& p) {
  const double m = mu(p);
  return HalfSpacePoint(p.sig(), Vector(m * p.horizontal()), std::abs(m) * p.z());
}

BoundaryPoint inversion_boundary_apply(const Signature& sig, const BoundaryPoint& bp) {
  validate(sig, bp);
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    const double n2 = f->w.squaredNorm();
    if (n2 == 0.0) return InfinityPoint{};
    const double h = horizontal_form(sig, f->w);
    if (std::abs(h) <= 1e-12 * n2) return VerticalHyperplane{f->w, 0.5};
    return FiniteBoundary{f->w / h};
  }
  if (const auto* hp = std::get_if<VerticalHyperplane>(&bp)) {
    if (hp->offset == 0.0) return bp;
    return FiniteBoundary{hp->normal / (2.0 * hp->offset)};
  }
  return FiniteBoundary{Vector::Zero(sig.horizontal_dim())};
}

BoundaryPoint inversion_boundary_projective(const Signature& sig, const BoundaryPoint& bp) {
  Vector v = boundary_to_projective(sig, bp).coords();
  v(sig.index_p()) = -v(sig.index_p());
  return projective_to_boundary(ProjectivePoint(sig, v));
}

HalfSpacePoint word_apply(const IsometryWord& w, const HalfSpacePoint& p) {
  HalfSpacePoint cur = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (const auto* g = std::get_if<IsometryG>(&*it)) {
      cur = g_apply(*g, cur);
    } else {
      cur = inversion_apply(cur);
    }
  }
  return cur;
}

BoundaryPoint word_boundary_apply(const Signature& sig, const IsometryWord& w,
                                  const BoundaryPoint& bp) {
  BoundaryPoint cur = bp;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (const auto* g = std::get_if<IsometryG>(&*it)) {
      cur = g_boundary_apply(sig, *g, cur);
    } else {
      cur = inversion_boundary_apply(sig, cur);
    }
  }
  return cur;
}

IsometryWord transitivity_word(const Signature& sig, const BoundaryPoint& bp) {
  validate(sig, bp);
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    return {{translation(sig, f->w)}};
  }
  if (is_infinity(bp)) return {{InversionJ{}}};
  const auto& hp = std::get<VerticalHyperplane>(bp);
  if (hp.offset != 0.0) {
    return {{InversionJ{}, translation(sig, hp.normal / (2.0 * hp.offset))}};
  }
  Vector s = hp.normal;
  s.tail(sig.ny()) *= -1.0;
  s /= -hp.normal.squaredNorm();
  return {{translation(sig, s), InversionJ{}, translation(sig, hp.normal / 2.0)}};
}

Matrix g_to_projective_action(const Signature& sig, const IsometryLetter& letter) {
  const int m = sig.ambient_dim();
  if (std::holds_alternative<InversionJ>(letter)) {
    Matrix r = Matrix::Identity(m, m);
    r(sig.index_p(), sig.index_p()) = -1.0;
    return r;
  }
  const auto& g = std::get<IsometryG>(letter);
  check_g(sig, g);
  const int n = sig.horizontal_dim();
  Matrix x(m, m);
  Matrix y(m, m);
  std::vector<HalfSpacePoint> pts;
  pts.emplace_back(sig, Vector::Zero(n), 1.0);
  pts.emplace_back(sig, Vector::Zero(n), 2.0);
  for (int k = 0; k < n; ++k) pts.emplace_back(sig, Vector::Unit(n, k), 1.0);
  for (int i = 0; i < m; ++i) {
    x.col(i) = embed_coords(pts[i]);
    y.col(i) = embed_coords(g_apply(g, pts[i]));
  }
  Eigen::FullPivLU<Matrix> lu(x);
  if (!lu.isInvertible() || lu.rcond() < 1e-12) {
    throw NumericalError("g_to_projective_action: sample points are ill-conditioned");
  }
  return y * lu.inverse();
}

}  // namespace hpq
