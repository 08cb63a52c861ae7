#pragma once

#include <variant>
#include <vector>

#include "hpq/boundary_point.hpp"
#include "hpq/metric.hpp"

namespace hpq {

/// (x, y, z) -> lambda (A (x, y) + t, z) with lambda > 0 and A in O(p-1, q).
struct IsometryG {
  double lambda = 1.0;
  Matrix A;
  Vector t;
};

/// The inversion (x, y, z) -> (mu x, mu y, |mu| z), mu = 1 / (h(x, y) + z^2).
struct InversionJ {};

using IsometryLetter = std::variant<IsometryG, InversionJ>;

/// Letters are applied right to left: word {a, b} acts as a(b(P)).
struct IsometryWord {
  std::vector<IsometryLetter> letters;
};

/// Validates lambda > 0 and A indefinite-orthogonal within 1e-10.
IsometryG make_isometry(const Signature& sig, double lambda, Matrix A, Vector t);
IsometryG identity_isometry(const Signature& sig);
IsometryG translation(const Signature& sig, const Vector& t);
IsometryG homothety(const Signature& sig, double lambda);

/// exp(J S) for an antisymmetric S; lies in the identity component of O(p-1, q).
Matrix indefinite_orthogonal_exp(const Signature& sig, const Matrix& antisymmetric);

HalfSpacePoint g_apply(const IsometryG& g, const HalfSpacePoint& p);
/// Differential of g: lambda A on the horizontal part, lambda on w.
Tangent g_push(const IsometryG& g, const Tangent& v);
IsometryG g_compose(const IsometryG& g1, const IsometryG& g2);
IsometryG g_inverse(const Signature& sig, const IsometryG& g);
BoundaryPoint g_boundary_apply(const Signature& sig, const IsometryG& g,
                               const BoundaryPoint& bp);

/// 1 / (h(x, y) + z^2); throws OnLightconeError on the lightcone of the origin.
double mu(const HalfSpacePoint& p);
HalfSpacePoint inversion_apply(const HalfSpacePoint& p);
/// Closed-form action of J on the boundary strata.
BoundaryPoint inversion_boundary_apply(const Signature& sig, const BoundaryPoint& bp);
/// The same action computed through the reflection X_p -> -X_p.
BoundaryPoint inversion_boundary_projective(const Signature& sig, const BoundaryPoint& bp);

HalfSpacePoint word_apply(const IsometryWord& w, const HalfSpacePoint& p);
BoundaryPoint word_boundary_apply(const Signature& sig, const IsometryWord& w,
                                  const BoundaryPoint& bp);

/// A word whose boundary action sends Finite(0) to bp.
IsometryWord transitivity_word(const Signature& sig, const BoundaryPoint& bp);

/// The matrix M with embed(apply(g, P)) = +-M embed(P). For G it is solved
/// from p + q + 1 sample points on the sheet X_p + X_{p+q+1} > 0; for J it is
/// the reflection of X_p.
Matrix g_to_projective_action(const Signature& sig, const IsometryLetter& g);

}  // namespace hpq
