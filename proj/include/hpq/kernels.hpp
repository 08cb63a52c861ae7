#pragma once

#include <cstddef>

namespace hpq::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* to_string(Backend b);

/// Whether the running CPU can execute the given backend.
bool backend_available(Backend b);

/// Best available backend, unless HPQ_KERNELS=scalar is set in the environment.
Backend active_backend();

// Point arguments are coordinate-major: cols[k][i] is coordinate k of point i.

/// max over a in A of min over b in B of |a - b|^2.
double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim, Backend backend);

/// out[i] = sum_k sign[k] (P_i[k] - origin[k])^2 - c.
void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out, Backend backend);

/// out[i] = sum_k sign[k] P_i[k] v[k].
void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out, Backend backend);

namespace scalar {
double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim);
void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out);
void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out);
}  // namespace scalar

namespace avx2 {
bool compiled();
double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim);
void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out);
void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out);
}  // namespace avx2

namespace neon {
bool compiled();
double directed_hausdorff_sq(const double* const* a, std::size_t na, const double* const* b,
                             std::size_t nb, int dim);
void signed_quadratic(const double* const* pts, std::size_t n, int dim, const double* sign,
                      const double* origin, double c, double* out);
void signed_bilinear(const double* const* pts, std::size_t n, int dim, const double* sign,
                     const double* v, double* out);
}  // namespace neon

}  // namespace hpq::kernels
