#include "hpq/boundary.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hpq/errors.hpp"

namespace hpq {

namespace {

double spread_to_last(const std::vector<Vector>& v) {
  double worst = 0.0;
  for (const auto& e : v) worst = std::max(worst, (e - v.back()).norm());
  return worst;
}

}  // namespace

BoundaryPoint boundary_limit(const Signature& sig, const std::vector<Vector>& samples,
                             const BoundaryLimitOptions& options) {
  if (samples.size() < 8) {
    throw InsufficientDataError("boundary_limit needs at least 8 samples, got " +
                                std::to_string(samples.size()));
  }
  for (const auto& s : samples) {
    if (s.size() != sig.horizontal_dim()) {
      throw DimensionError("boundary_limit: sample dimension mismatch");
    }
    if (!s.allFinite()) throw UnclassifiableError("boundary_limit: non-finite sample");
  }
  const double cauchy = spread_to_last(samples);
  if (cauchy <= options.tol) return FiniteBoundary{samples.back()};

  bool increasing = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].norm() > samples[i - 1].norm())) increasing = false;
  }

  double dir_spread = std::numeric_limits<double>::infinity();
  double gap_spread = std::numeric_limits<double>::infinity();
  double gap = 0.0;
  Vector normal;
  if (sig.nx() > 0 && sig.ny() > 0) {
    std::vector<Vector> dirs;
    std::vector<double> gaps;
    bool nonzero = true;
    for (const auto& s : samples) {
      const double nx = s.head(sig.nx()).norm();
      const double ny = s.tail(sig.ny()).norm();
      if (nx == 0.0 || ny == 0.0) {
        nonzero = false;
        break;
      }
      Vector d(sig.horizontal_dim());
      d << s.head(sig.nx()) / nx, s.tail(sig.ny()) / ny;
      dirs.push_back(d);
      gaps.push_back(nx - ny);
    }
    if (nonzero) {
      dir_spread = spread_to_last(dirs);
      gap = gaps.back();
      gap_spread = 0.0;
      for (double g : gaps) gap_spread = std::max(gap_spread, std::abs(g - gap));
      normal = dirs.back();
    }
  }

  if (increasing && dir_spread <= options.direction_tol &&
      gap_spread <= options.gap_tol * (1.0 + std::abs(gap))) {
    return VerticalHyperplane{normal, gap};
  }
  if (increasing) return InfinityPoint{};

  std::ostringstream msg;
  msg << "boundary_limit: samples neither settle nor escape monotonically (cauchy spread "
      << cauchy << ", direction spread " << dir_spread << ", gap spread " << gap_spread
      << ")";
  throw UnclassifiableError(msg.str());
}

double sampled_hausdorff(const PointSet& a, const PointSet& b, kernels::Backend backend) {
  if (a.empty() || b.empty()) {
    throw EmptyWindowError("sampled_hausdorff: a sample set is empty in the window");
  }
  if (a.dim() != b.dim()) throw DimensionError("sampled_hausdorff: dimension mismatch");
  const auto ca = a.column_pointers();
  const auto cb = b.column_pointers();
  const double ab =
      kernels::directed_hausdorff_sq(ca.data(), a.size(), cb.data(), b.size(), a.dim(), backend);
  const double ba =
      kernels::directed_hausdorff_sq(cb.data(), b.size(), ca.data(), a.size(), a.dim(), backend);
  return std::sqrt(std::max(ab, ba));
}

double sampled_hausdorff(int dim, const ImplicitFunction& a, const ImplicitFunction& b,
                         const SampleWindow& window) {
  return sampled_hausdorff(sample_implicit(dim, a, window), sample_implicit(dim, b, window));
}

std::vector<Vector> hyperplane_stratum_directions(const Signature& sig) {
  if (sig.p() != 2 || sig.q() != 1) {
    throw InvalidParameterError("hyperplane stratum enumeration is provided for (2, 1) only");
  }
  return {(Vector(2) << 1.0, 1.0).finished(), (Vector(2) << 1.0, -1.0).finished()};
}

}  // namespace hpq
