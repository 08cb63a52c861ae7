#pragma once

#include <Eigen/Dense>

namespace hpq {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Signature (plus, minus) of a flat bilinear form; the plus block comes first.
struct FormSignature {
  int plus = 0;
  int minus = 0;

  int dim() const { return plus + minus; }
  bool operator==(const FormSignature&) const = default;
};

/// Signature (p, q) of the pseudo-hyperbolic space H^{p,q}, p >= 1.
///
/// The half-space model lives in R^{p-1} (x) + R^q (y) + R (z); the
/// hyperboloid lives in R^{p,q+1}.
class Signature {
 public:
  Signature(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }

  /// Number of x coordinates.
  int nx() const { return p_ - 1; }
  /// Number of y coordinates.
  int ny() const { return q_; }
  /// Dimension of the boundary plane {z = 0}, i.e. of (x, y).
  int horizontal_dim() const { return p_ - 1 + q_; }
  /// Dimension of the half-space (x, y, z).
  int dim() const { return p_ + q_; }
  /// Dimension of the ambient R^{p,q+1}.
  int ambient_dim() const { return p_ + q_ + 1; }

  /// Zero-based index of the ambient coordinate X_p.
  int index_p() const { return p_ - 1; }
  /// Zero-based index of the ambient coordinate X_{p+q+1}.
  int index_last() const { return p_ + q_; }

  FormSignature ambient() const { return {p_, q_ + 1}; }
  FormSignature horizontal() const { return {p_ - 1, q_}; }

  bool operator==(const Signature&) const = default;

 private:
  int p_;
  int q_;
};

enum class CausalType { Spacelike, Lightlike, Timelike };

const char* to_string(CausalType type);

inline constexpr double kCausalTolerance = 1e-9;

/// Sum_{i < plus} X_i Y_i - Sum_{i >= plus} X_i Y_i.
double inner_product(FormSignature sig, const Vector& a, const Vector& b);

/// Quadratic form <v, v>.
double quadratic_form(FormSignature sig, const Vector& v);

/// Diagonal of the form: +1 on the plus block, -1 on the minus block.
Vector form_diagonal(FormSignature sig);

/// Causal type with the relative dead band tol * |v|^2_euclid.
CausalType causal_type(FormSignature sig, const Vector& v,
                       double tol = kCausalTolerance);

/// True iff max |A^T J A - J| <= tol.
bool is_indefinite_orthogonal(FormSignature sig, const Matrix& a, double tol);

/// The flat form dx^2 - dy^2 + dz^2 on the half-space coordinates (x, y, z).
double flat_metric(const Signature& sig, const Vector& a, const Vector& b);

/// Diagonal of the flat metric on (x, y, z).
Vector flat_metric_diagonal(const Signature& sig);

}  // namespace hpq
