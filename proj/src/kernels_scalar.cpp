#include <limits>

#include "hpq/kernels.hpp"

namespace hpq::kernels::scalar {

double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim) {
  double worst = 0.0;
  for (std::size_t i = 0; i < na; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < nb; ++j) {
      double d = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double t = a[k][i] - b[k][j];
        d = d + t * t;
      }
      if (d < best) best = d;
      if (best < worst) break;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double t = pts[k][i] - origin[k];
      acc = acc + sign[k] * (t * t);
    }
    out[i] = acc - c;
  }
}

void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) acc = acc + (sign[k] * v[k]) * pts[k][i];
    out[i] = acc;
  }
}

}  // namespace hpq::kernels::scalar
