#include "hpq/submanifolds.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "hpq/errors.hpp"
#include "hpq/kernels.hpp"

namespace hpq {

namespace {

/// Orthonormal basis of the column space of m.
Matrix column_space(const Matrix& m, double threshold = 1e-10) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(threshold);
  const Eigen::Index r = qr.rank();
  const Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.rows());
  return q.leftCols(r);
}

int rank_of(const Matrix& m, double threshold = 1e-10) {
  if (m.cols() == 0) return 0;
  Eigen::ColPivHouseholderQR<Matrix> qr(m);
  qr.setThreshold(threshold);
  return static_cast<int>(qr.rank());
}

/// Orthonormal basis of the Euclidean orthogonal complement of the columns of m.
Matrix complement(const Matrix& m) {
  const Matrix q = column_space(m);
  if (q.cols() == 0) return Matrix::Identity(m.rows(), m.rows());
  Eigen::HouseholderQR<Matrix> qr(q);
  const Matrix full = qr.householderQ() * Matrix::Identity(m.rows(), m.rows());
  return full.rightCols(m.rows() - q.cols());
}

Matrix vertical_extension(const Matrix& horizontal_basis) {
  const Eigen::Index n = horizontal_basis.rows();
  Matrix s = Matrix::Zero(n + 1, horizontal_basis.cols() + 1);
  s.topLeftCorner(n, horizontal_basis.cols()) = horizontal_basis;
  s(n, horizontal_basis.cols()) = 1.0;
  return s;
}

Vector quadric_gradient(const Signature& sig, const Vector& center, const Vector& coords) {
  const int n = sig.horizontal_dim();
  Vector g(n + 1);
  const Vector off = coords.head(n) - center;
  g.head(sig.nx()) = 2.0 * off.head(sig.nx());
  g.segment(sig.nx(), sig.ny()) = -2.0 * off.tail(sig.ny());
  g(n) = 2.0 * coords(n);
  return g;
}

double quadric_value(const Signature& sig, const Vector& center, double c,
                     const Vector& coords) {
  const int n = sig.horizontal_dim();
  const double z = coords(n);
  return horizontal_form(sig, Vector(coords.head(n) - center)) + z * z - c;
}

}  // namespace

AffineSubspace make_affine_subspace(const Vector& basepoint, const Matrix& spanning) {
  if (spanning.cols() > 0 && spanning.rows() != basepoint.size()) {
    throw DimensionError("make_affine_subspace: dimension mismatch");
  }
  const Matrix q = column_space(spanning);
  if (q.cols() != spanning.cols()) {
    throw DegenerateInputError("make_affine_subspace: spanning vectors are dependent");
  }
  return {basepoint, q.cols() == 0 ? Matrix(basepoint.size(), 0) : q};
}

double distance_to(const AffineSubspace& l, const Vector& w) {
  const Vector r = w - l.basepoint;
  if (l.basis.cols() == 0) return r.norm();
  return (r - l.basis * (l.basis.transpose() * r)).norm();
}

TotallyGeodesicHypersurface hypersurface_through(const HalfSpacePoint& p, const Tangent& n) {
  const Signature& sig = p.sig();
  if (n.horizontal.size() != sig.horizontal_dim()) {
    throw DimensionError("hypersurface_through: normal dimension mismatch");
  }
  const double norm = std::sqrt(n.horizontal.squaredNorm() + n.w * n.w);
  if (norm == 0.0) throw DegenerateInputError("hypersurface_through: zero normal");
  if (std::abs(n.w) <= 1e-14 * norm) {
    Vector m = n.horizontal;
    m.tail(sig.ny()) *= -1.0;
    return VerticalHypersurface{{p.horizontal(), complement(m)}};
  }
  const Vector center = p.horizontal() - (p.z() / n.w) * n.horizontal;
  const double c = horizontal_form(sig, Vector(p.horizontal() - center)) + p.z() * p.z();
  return QuadricHypersurface{center, c};
}

InducedSignature signature_of(const Signature& sig, const TotallyGeodesicHypersurface& h,
                              double tol) {
  if (const auto* q = std::get_if<QuadricHypersurface>(&h)) {
    if (std::abs(q->c) <= tol) return {sig.p() - 1, sig.q() - 1, 1, true};
    if (q->c < 0.0) return {sig.p(), sig.q() - 1, 0, false};
    return {sig.p() - 1, sig.q(), 0, false};
  }
  const Matrix& b = std::get<VerticalHypersurface>(h).plane.basis;
  InducedSignature out;
  if (b.cols() > 0) {
    const Vector j = form_diagonal(sig.horizontal());
    const Matrix gram = b.transpose() * j.asDiagonal() * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double ev = es.eigenvalues()(i);
      if (ev > kGramDeadBand) {
        ++out.positive;
      } else if (ev < -kGramDeadBand) {
        ++out.negative;
      } else {
        ++out.null_rank;
      }
    }
  }
  out.positive += 1;
  out.degenerate = out.null_rank > 0;
  return out;
}

double hypersurface_residual(const Signature& sig, const TotallyGeodesicHypersurface& h,
                             const Vector& coords) {
  if (coords.size() != sig.dim()) throw DimensionError("hypersurface_residual: dimension");
  if (const auto* q = std::get_if<QuadricHypersurface>(&h)) {
    return quadric_value(sig, q->center, q->c, coords);
  }
  return distance_to(std::get<VerticalHypersurface>(h).plane,
                     coords.head(sig.horizontal_dim()));
}

bool contains(const Signature& sig, const TotallyGeodesicHypersurface& h,
              const HalfSpacePoint& p, double tol) {
  return std::abs(hypersurface_residual(sig, h, p.coords())) <= tol;
}

std::vector<double> quadric_residuals(const Signature& sig, const QuadricHypersurface& q,
                                      const PointSet& pts) {
  if (pts.dim() != sig.dim()) throw DimensionError("quadric_residuals: dimension mismatch");
  const Vector sign = flat_metric_diagonal(sig);
  Vector origin = Vector::Zero(sig.dim());
  origin.head(sig.horizontal_dim()) = q.center;
  std::vector<double> out(pts.size());
  const auto cols = pts.column_pointers();
  kernels::signed_quadratic(cols.data(), pts.size(), sig.dim(), sign.data(), origin.data(),
                            q.c, out.data(), kernels::active_backend());
  return out;
}

Matrix tangent_basis(const Signature& sig, const TotallyGeodesicHypersurface& h,
                     const HalfSpacePoint& p) {
  if (const auto* q = std::get_if<QuadricHypersurface>(&h)) {
    const Vector g = quadric_gradient(sig, q->center, p.coords());
    return complement(g);
  }
  return vertical_extension(std::get<VerticalHypersurface>(h).plane.basis);
}

ImplicitFunction implicit_function(const Signature& sig, const TotallyGeodesicHypersurface& h) {
  if (const auto* q = std::get_if<QuadricHypersurface>(&h)) {
    return [sig, center = q->center, c = q->c](const Vector& x) {
      return quadric_value(sig, center, c, x);
    };
  }
  const AffineSubspace& l = std::get<VerticalHypersurface>(h).plane;
  const Matrix nrm = complement(l.basis);
  if (nrm.cols() != 1) {
    throw DegenerateInputError("implicit_function: vertical plane is not a hypersurface");
  }
  return [n = sig.horizontal_dim(), base = l.basepoint, normal = Vector(nrm.col(0))](
             const Vector& x) { return normal.dot(x.head(n) - base); };
}

double Lightcone::residual(const Vector& coords) const {
  const Signature& sig = apex.sig();
  const int n = sig.horizontal_dim();
  const double dz = coords(n) - apex.z();
  return horizontal_form(sig, Vector(coords.head(n) - apex.horizontal())) + dz * dz;
}

bool Lightcone::contains(const HalfSpacePoint& p, double tol) const {
  return std::abs(residual(p.coords())) <= tol;
}

ImplicitFunction Lightcone::implicit() const {
  return [cone = *this](const Vector& x) { return cone.residual(x); };
}

PointSet Lightcone::sample(const SampleWindow& window) const {
  return sample_implicit(apex.sig().dim(), implicit(), window);
}

SubmanifoldDescriptor submanifold_through(const HalfSpacePoint& p,
                                          const std::vector<Tangent>& w) {
  const Signature& sig = p.sig();
  const int n = sig.dim();
  if (w.empty()) throw DegenerateInputError("submanifold_through: empty tangent family");
  Matrix m(n, static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].horizontal.size() != sig.horizontal_dim()) {
      throw DimensionError("submanifold_through: tangent dimension mismatch");
    }
    m.col(static_cast<Eigen::Index>(i)) = w[i].coords();
  }
  const int k = static_cast<int>(w.size());
  if (rank_of(m) < k) throw DegenerateInputError("submanifold_through: dependent tangents");

  Matrix with_vertical(n, k + 1);
  with_vertical << m, Vector::Unit(n, n - 1);
  const Matrix horizontal = m.topRows(n - 1);
  if (rank_of(with_vertical) == k) {
    return VerticalSubmanifold{{p.horizontal(), column_space(horizontal)}};
  }

  const Vector g = flat_metric_diagonal(sig);
  const Matrix constraints = m.transpose() * g.asDiagonal();
  const Matrix kernel = complement(constraints.transpose());
  const Vector normal = kernel * (kernel.transpose() * Vector::Unit(n, n - 1));
  const auto h = hypersurface_through(p, Tangent::from_coords(normal));
  const auto* q = std::get_if<QuadricHypersurface>(&h);
  if (q == nullptr) throw NumericalError("submanifold_through: lost transversality");
  return QuadricSlice{q->center, q->c, {p.horizontal(), column_space(horizontal)}};
}

double submanifold_residual(const Signature& sig, const SubmanifoldDescriptor& s,
                            const Vector& coords) {
  const Vector w = coords.head(sig.horizontal_dim());
  if (const auto* v = std::get_if<VerticalSubmanifold>(&s)) return distance_to(v->plane, w);
  const auto& q = std::get<QuadricSlice>(s);
  return std::max(std::abs(quadric_value(sig, q.center, q.c, coords)),
                  distance_to(q.plane, w));
}

Matrix tangent_basis(const Signature& sig, const SubmanifoldDescriptor& s,
                     const HalfSpacePoint& p) {
  if (const auto* v = std::get_if<VerticalSubmanifold>(&s)) {
    return vertical_extension(v->plane.basis);
  }
  const auto& q = std::get<QuadricSlice>(s);
  const Matrix span = vertical_extension(q.plane.basis);
  const Vector g = quadric_gradient(sig, q.center, p.coords());
  const Matrix row = (g.transpose() * span);
  const Matrix coeffs = complement(row.transpose());
  return column_space(span * coeffs);
}

}  // namespace hpq
