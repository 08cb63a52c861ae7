#pragma once

#include <variant>

#include "hpq/forms.hpp"

namespace hpq {

/// A point (x0, y0) of the boundary plane {z = 0}.
struct FiniteBoundary {
  Vector w;  // stacked (x0, y0)
};

/// A degenerate vertical hyperplane x.u - y.v = d, with (u, v) null.
///
/// Coefficients are stored as given; two representations of the same
/// hyperplane compare equal through `same_boundary_point`.
struct VerticalHyperplane {
  Vector normal;  // stacked (u, v)
  double offset = 0.0;
};

/// The point at infinity of the one-point compactification.
struct InfinityPoint {};

/// A point of the boundary at infinity seen from the half-space: one of the
/// three strata.
using BoundaryPoint = std::variant<FiniteBoundary, VerticalHyperplane, InfinityPoint>;

inline BoundaryPoint finite_boundary(Vector w) { return FiniteBoundary{std::move(w)}; }
inline BoundaryPoint vertical_hyperplane(Vector normal, double offset) {
  return VerticalHyperplane{std::move(normal), offset};
}
inline BoundaryPoint boundary_infinity() { return InfinityPoint{}; }

bool is_finite(const BoundaryPoint& bp);
bool is_hyperplane(const BoundaryPoint& bp);
bool is_infinity(const BoundaryPoint& bp);

/// Throws InvalidBoundaryError unless the stored data is consistent with sig
/// (dimensions, nonzero null normal).
void validate(const Signature& sig, const BoundaryPoint& bp, double tol = 1e-9);

/// Value of x.u - y.v - d at a horizontal point.
double hyperplane_value(const Signature& sig, const VerticalHyperplane& hp,
                        const Vector& w);

/// Equality of boundary points up to the scaling of hyperplane coefficients.
bool same_boundary_point(const Signature& sig, const BoundaryPoint& a,
                         const BoundaryPoint& b, double tol);

}  // namespace hpq
