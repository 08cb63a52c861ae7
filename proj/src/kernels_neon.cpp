#include <limits>

#include "hpq/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hpq::kernels::neon {

#if defined(__aarch64__)

bool compiled() { return true; }

double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim) {
  double worst = 0.0;
  const std::size_t nb2 = nb & ~static_cast<std::size_t>(1);
  for (std::size_t i = 0; i < na; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 0;
    for (; j < nb2; j += 2) {
      float64x2_t d = vdupq_n_f64(0.0);
      for (int k = 0; k < dim; ++k) {
        const float64x2_t t = vsubq_f64(vdupq_n_f64(a[k][i]), vld1q_f64(b[k] + j));
        d = vaddq_f64(d, vmulq_f64(t, t));
      }
      const double m = vminvq_f64(d);
      if (m < best) best = m;
      if (best < worst) break;
    }
    if (!(best < worst)) {
      for (; j < nb; ++j) {
        double d = 0.0;
        for (int k = 0; k < dim; ++k) {
          const double t = a[k][i] - b[k][j];
          d = d + t * t;
        }
        if (d < best) best = d;
        if (best < worst) break;
      }
    }
    if (best > worst) worst = best;
  }
  return worst;
}

void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out) {
  const std::size_t n2 = n & ~static_cast<std::size_t>(1);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int k = 0; k < dim; ++k) {
      const float64x2_t t = vsubq_f64(vld1q_f64(pts[k] + i), vdupq_n_f64(origin[k]));
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(sign[k]), vmulq_f64(t, t)));
    }
    vst1q_f64(out + i, vsubq_f64(acc, vdupq_n_f64(c)));
  }
  for (; i < n; ++i) {
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
  const std::size_t n2 = n & ~static_cast<std::size_t>(1);
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (int k = 0; k < dim; ++k) {
      acc = vaddq_f64(acc, vmulq_f64(vdupq_n_f64(sign[k] * v[k]), vld1q_f64(pts[k] + i)));
    }
    vst1q_f64(out + i, acc);
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < dim; ++k) acc = acc + (sign[k] * v[k]) * pts[k][i];
    out[i] = acc;
  }
}

#else

bool compiled() { return false; }

double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim) {
  return scalar::directed_hausdorff_sq(a, na, b, nb, dim);
}

void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out) {
  scalar::signed_quadratic(pts, n, dim, sign, origin, c, out);
}

void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out) {
  scalar::signed_bilinear(pts, n, dim, sign, v, out);
}

#endif

}  // namespace hpq::kernels::neon
