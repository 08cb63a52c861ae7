#include "hpq/boundary_point.hpp"

#include <cmath>

#include "hpq/errors.hpp"
#include "hpq/models.hpp"

namespace hpq {

bool is_finite(const BoundaryPoint& bp) { return std::holds_alternative<FiniteBoundary>(bp); }
bool is_hyperplane(const BoundaryPoint& bp) {
  return std::holds_alternative<VerticalHyperplane>(bp);
}
bool is_infinity(const BoundaryPoint& bp) { return std::holds_alternative<InfinityPoint>(bp); }

void validate(const Signature& sig, const BoundaryPoint& bp, double tol) {
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    if (f->w.size() != sig.horizontal_dim()) {
      throw InvalidBoundaryError("finite boundary point has the wrong dimension");
    }
    if (!f->w.allFinite()) throw InvalidBoundaryError("finite boundary point is not finite");
  } else if (const auto* hp = std::get_if<VerticalHyperplane>(&bp)) {
    if (hp->normal.size() != sig.horizontal_dim()) {
      throw InvalidBoundaryError("hyperplane normal has the wrong dimension");
    }
    const double n2 = hp->normal.squaredNorm();
    if (!(n2 > 0.0) || !std::isfinite(hp->offset)) {
      throw InvalidBoundaryError("hyperplane needs a nonzero normal and a finite offset");
    }
    if (std::abs(horizontal_form(sig, hp->normal)) > tol * n2) {
      throw InvalidBoundaryError(
          "hyperplane normal (u, v) is not null, so the hyperplane is not degenerate");
    }
  }
}

double hyperplane_value(const Signature& sig, const VerticalHyperplane& hp,
                        const Vector& w) {
  return horizontal_product(sig, hp.normal, w) - hp.offset;
}

bool same_boundary_point(const Signature& sig, const BoundaryPoint& a,
                         const BoundaryPoint& b, double tol) {
  if (a.index() != b.index()) return false;
  return approx_equal(boundary_to_projective(sig, a), boundary_to_projective(sig, b), tol);
}

}  // namespace hpq
