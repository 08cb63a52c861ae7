#pragma once

#include <vector>

#include "hpq/boundary_point.hpp"
#include "hpq/kernels.hpp"
#include "hpq/sampling.hpp"

namespace hpq {

struct BoundaryLimitOptions {
  double tol = 1e-8;            // Cauchy spread for a finite limit
  double direction_tol = 1e-6;  // spread of x/|x| and y/|y|
  double gap_tol = 1e-6;        // spread of |x| - |y|
};

/// Classifies the limit of a tail of boundary points (x_n, y_n).
///
/// Finite if the tail is Cauchy; a vertical hyperplane x.u - y.v = a if the
/// norms grow while the directions and the gap |x_n| - |y_n| settle; infinity
/// if the norms grow otherwise. Anything else is unclassifiable.
BoundaryPoint boundary_limit(const Signature& sig, const std::vector<Vector>& samples,
                             const BoundaryLimitOptions& options = {});

/// Symmetric Hausdorff distance between two finite point sets.
double sampled_hausdorff(const PointSet& a, const PointSet& b,
                         kernels::Backend backend = kernels::active_backend());

/// Samples both zero sets in the window and returns their Hausdorff distance.
double sampled_hausdorff(int dim, const ImplicitFunction& a, const ImplicitFunction& b,
                         const SampleWindow& window);

/// Null directions (up to sign) of the hyperplane stratum for signature (2, 1):
/// (1, 1) and (1, -1). Each carries a line's worth of intercepts.
std::vector<Vector> hyperplane_stratum_directions(const Signature& sig);

}  // namespace hpq
