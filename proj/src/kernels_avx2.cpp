#include <limits>

#include "hpq/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace hpq::kernels::avx2 {

#if defined(__AVX2__)

bool compiled() { return true; }

namespace {

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

}  // namespace

double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim) {
  double worst = 0.0;
  const std::size_t nb4 = nb & ~static_cast<std::size_t>(3);
  for (std::size_t i = 0; i < na; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = 0;
    for (; j < nb4; j += 4) {
      __m256d d = _mm256_setzero_pd();
      for (int k = 0; k < dim; ++k) {
        const __m256d t = _mm256_sub_pd(_mm256_set1_pd(a[k][i]), _mm256_loadu_pd(b[k] + j));
        d = _mm256_add_pd(d, _mm256_mul_pd(t, t));
      }
      const double m = hmin(d);
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
  const std::size_t n4 = n & ~static_cast<std::size_t>(3);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int k = 0; k < dim; ++k) {
      const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(pts[k] + i), _mm256_set1_pd(origin[k]));
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(sign[k]), _mm256_mul_pd(t, t)));
    }
    _mm256_storeu_pd(out + i, _mm256_sub_pd(acc, vc));
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
  const std::size_t n4 = n & ~static_cast<std::size_t>(3);
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (int k = 0; k < dim; ++k) {
      const __m256d sv = _mm256_set1_pd(sign[k] * v[k]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(sv, _mm256_loadu_pd(pts[k] + i)));
    }
    _mm256_storeu_pd(out + i, acc);
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

}  // namespace hpq::kernels::avx2
