#include <cstdlib>
#include <cstring>

#include "hpq/kernels.hpp"

namespace hpq::kernels {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::Neon:
      return neon::compiled();
  }
  return false;
}

Backend active_backend() {
  const char* env = std::getenv("HPQ_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

namespace {

Backend usable(Backend b) { return backend_available(b) ? b : Backend::Scalar; }

}  // namespace

double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim, Backend backend) {
  switch (usable(backend)) {
    case Backend::Avx2:
      return avx2::directed_hausdorff_sq(a, na, b, nb, dim);
    case Backend::Neon:
      return neon::directed_hausdorff_sq(a, na, b, nb, dim);
    default:
      return scalar::directed_hausdorff_sq(a, na, b, nb, dim);
  }
}

void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out, Backend backend) {
  switch (usable(backend)) {
    case Backend::Avx2:
      return avx2::signed_quadratic(pts, n, dim, sign, origin, c, out);
    case Backend::Neon:
      return neon::signed_quadratic(pts, n, dim, sign, origin, c, out);
    default:
      return scalar::signed_quadratic(pts, n, dim, sign, origin, c, out);
  }
}

void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out, Backend backend) {
  switch (usable(backend)) {
    case Backend::Avx2:
      return avx2::signed_bilinear(pts, n, dim, sign, v, out);
    case Backend::Neon:
      return neon::signed_bilinear(pts, n, dim, sign, v, out);
    default:
      return scalar::signed_bilinear(pts, n, dim, sign, v, out);
  }
}

}  // namespace hpq::kernels
