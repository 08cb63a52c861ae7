#include "hpq/sampling.hpp"

#include <cmath>

#include "hpq/errors.hpp"

namespace hpq {

namespace {

double axis_lo(int k, int dim, double r) { return k == dim - 1 ? 0.0 : -r; }

double bisect(const ImplicitFunction& f, Vector& p, int axis, double lo, double hi,
              double flo) {
  for (int it = 0; it < 80 && hi - lo > 1e-14 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    p(axis) = mid;
    const double fm = f(p);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PointSet sample_implicit(int dim, const ImplicitFunction& f, const SampleWindow& window) {
  if (dim < 1) throw InvalidParameterError("sample_implicit: dimension must be positive");
  if (window.grid < 2 || window.refine < 1 || !(window.R > 0.0)) {
    throw InvalidParameterError("sample_implicit: need grid >= 2, refine >= 1, R > 0");
  }
  const int g = window.grid;
  const double r = window.R;
  auto node = [&](int k, int idx) {
    const double lo = axis_lo(k, dim, r);
    return lo + (r - lo) * static_cast<double>(idx) / (g - 1);
  };

  PointSet out(dim);
  const int scan = (g - 1) * window.refine;
  std::vector<int> idx(dim, 0);
  for (int axis = 0; axis < dim; ++axis) {
    long lines = 1;
    for (int k = 0; k < dim - 1; ++k) lines *= g;
    const double lo = axis_lo(axis, dim, r);
    const double step = (r - lo) / scan;
    for (long line = 0; line < lines; ++line) {
      Vector p(dim);
      long rest = line;
      for (int k = 0; k < dim; ++k) {
        if (k == axis) continue;
        p(k) = node(k, static_cast<int>(rest % g));
        rest /= g;
      }
      p(axis) = lo;
      double prev = f(p);
      if (prev == 0.0) out.push_back(p);
      for (int s = 1; s <= scan; ++s) {
        const double t = lo + step * s;
        p(axis) = t;
        const double cur = f(p);
        if (cur == 0.0) {
          out.push_back(p);
        } else if (prev != 0.0 && (cur < 0.0) != (prev < 0.0) && std::isfinite(cur) &&
                   std::isfinite(prev)) {
          Vector q = p;
          q(axis) = bisect(f, q, axis, t - step, t, prev);
          out.push_back(q);
        }
        prev = cur;
      }
    }
  }
  return out;
}

}  // namespace hpq
