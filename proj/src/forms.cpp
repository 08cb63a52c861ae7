#include "hpq/forms.hpp"

#include <string>

#include "hpq/errors.hpp"

namespace hpq {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 1 || q < 0) {
    throw InvalidParameterError("signature requires p >= 1 and q >= 0, got (" +
                                std::to_string(p) + "," + std::to_string(q) +
                                ")");
  }
}

const char* to_string(CausalType type) {
  switch (type) {
    case CausalType::Spacelike:
      return "spacelike";
    case CausalType::Lightlike:
      return "lightlike";
    case CausalType::Timelike:
      return "timelike";
  }
  return "unknown";
}

double inner_product(FormSignature sig, const Vector& a, const Vector& b) {
  if (a.size() != sig.dim() || b.size() != sig.dim()) {
    throw DimensionError("inner_product: expected vectors of length " +
                         std::to_string(sig.dim()));
  }
  return a.head(sig.plus).dot(b.head(sig.plus)) -
         a.tail(sig.minus).dot(b.tail(sig.minus));
}

double quadratic_form(FormSignature sig, const Vector& v) {
  return inner_product(sig, v, v);
}

Vector form_diagonal(FormSignature sig) {
  Vector d(sig.dim());
  d.head(sig.plus).setOnes();
  d.tail(sig.minus).setConstant(-1.0);
  return d;
}

CausalType causal_type(FormSignature sig, const Vector& v, double tol) {
  const double norm2 = v.squaredNorm();
  if (v.size() != sig.dim()) {
    throw DimensionError("causal_type: dimension mismatch");
  }
  if (norm2 == 0.0) {
    throw DegenerateInputError("causal_type: zero vector");
  }
  const double q = quadratic_form(sig, v);
  if (q > tol * norm2) return CausalType::Spacelike;
  if (q < -tol * norm2) return CausalType::Timelike;
  return CausalType::Lightlike;
}

bool is_indefinite_orthogonal(FormSignature sig, const Matrix& a, double tol) {
  if (a.rows() != sig.dim() || a.cols() != sig.dim()) {
    throw DimensionError("is_indefinite_orthogonal: expected a square matrix of side " +
                         std::to_string(sig.dim()));
  }
  const Vector d = form_diagonal(sig);
  const Matrix j = d.asDiagonal();
  const Matrix defect = a.transpose() * j * a - j;
  return defect.size() == 0 || defect.cwiseAbs().maxCoeff() <= tol;
}

Vector flat_metric_diagonal(const Signature& sig) {
  Vector d(sig.dim());
  d.head(sig.nx()).setOnes();
  d.segment(sig.nx(), sig.ny()).setConstant(-1.0);
  d(sig.dim() - 1) = 1.0;
  return d;
}

double flat_metric(const Signature& sig, const Vector& a, const Vector& b) {
  if (a.size() != sig.dim() || b.size() != sig.dim()) {
    throw DimensionError("flat_metric: dimension mismatch");
  }
  return (a.array() * flat_metric_diagonal(sig).array() * b.array()).sum();
}

}  // namespace hpq
