#pragma once

#include <variant>
#include <vector>

#include "hpq/models.hpp"
#include "hpq/sampling.hpp"

namespace hpq {

/// basepoint + span(columns of basis) in the horizontal space R^{p+q-1}.
struct AffineSubspace {
  Vector basepoint;
  Matrix basis;  // Euclidean-orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Orthonormalizes the columns of `spanning`; throws DegenerateInputError if
/// they are linearly dependent.
AffineSubspace make_affine_subspace(const Vector& basepoint, const Matrix& spanning);

/// Euclidean distance from a horizontal point to the subspace.
double distance_to(const AffineSubspace& l, const Vector& w);

/// Vertical hyperplane V_L = L x (0, inf) over a codimension-one L.
struct VerticalHypersurface {
  AffineSubspace plane;
};

/// |x - x0|^2 - |y - y0|^2 + z^2 = c.
struct QuadricHypersurface {
  Vector center;
  double c = 0.0;
};

using TotallyGeodesicHypersurface = std::variant<VerticalHypersurface, QuadricHypersurface>;

/// Counts of positive, negative and null directions of the induced form.
struct InducedSignature {
  int positive = 0;
  int negative = 0;
  int null_rank = 0;
  bool degenerate = false;
};

inline constexpr double kGramDeadBand = 1e-9;

/// The totally geodesic hypersurface through p whose tangent space is the
/// flat-metric orthogonal of n.
TotallyGeodesicHypersurface hypersurface_through(const HalfSpacePoint& p, const Tangent& n);

InducedSignature signature_of(const Signature& sig, const TotallyGeodesicHypersurface& h,
                              double tol = 1e-12);

/// Defining-equation residual (signed for quadrics, a distance for vertical).
double hypersurface_residual(const Signature& sig, const TotallyGeodesicHypersurface& h,
                             const Vector& coords);
bool contains(const Signature& sig, const TotallyGeodesicHypersurface& h,
              const HalfSpacePoint& p, double tol);

/// Batch quadric residuals on (x, y, z) point sets through the active kernel.
std::vector<double> quadric_residuals(const Signature& sig, const QuadricHypersurface& q,
                                      const PointSet& pts);

/// Columns spanning the tangent space at p, in (x, y, z) coordinates.
Matrix tangent_basis(const Signature& sig, const TotallyGeodesicHypersurface& h,
                     const HalfSpacePoint& p);

/// Implicit function whose zero set is the hypersurface.
ImplicitFunction implicit_function(const Signature& sig, const TotallyGeodesicHypersurface& h);

/// The lightcone |x - x0|^2 - |y - y0|^2 + (z - z0)^2 = 0 from an interior point.
struct Lightcone {
  HalfSpacePoint apex;

  double residual(const Vector& coords) const;
  bool contains(const HalfSpacePoint& p, double tol) const;
  ImplicitFunction implicit() const;
  PointSet sample(const SampleWindow& window = {}) const;
};

struct VerticalSubmanifold {
  AffineSubspace plane;
};

/// A quadric intersected with the vertical subspace over `plane`.
struct QuadricSlice {
  Vector center;
  double c = 0.0;
  AffineSubspace plane;
};

using SubmanifoldDescriptor = std::variant<VerticalSubmanifold, QuadricSlice>;

/// The totally geodesic submanifold through p tangent to span(w).
SubmanifoldDescriptor submanifold_through(const HalfSpacePoint& p,
                                          const std::vector<Tangent>& w);

double submanifold_residual(const Signature& sig, const SubmanifoldDescriptor& s,
                            const Vector& coords);
Matrix tangent_basis(const Signature& sig, const SubmanifoldDescriptor& s,
                     const HalfSpacePoint& p);

}  // namespace hpq
