#include "hpq/point_set.hpp"

#include "hpq/errors.hpp"

namespace hpq {

PointSet::PointSet(int dim) : dim_(dim), cols_(dim) {
  if (dim < 1) throw InvalidParameterError("PointSet dimension must be positive");
}

void PointSet::push_back(const Vector& p) {
  if (p.size() != dim_) throw DimensionError("PointSet::push_back: dimension mismatch");
  for (int k = 0; k < dim_; ++k) cols_[k].push_back(p(k));
}

void PointSet::append(const PointSet& other) {
  if (other.dim_ != dim_) throw DimensionError("PointSet::append: dimension mismatch");
  for (int k = 0; k < dim_; ++k) {
    cols_[k].insert(cols_[k].end(), other.cols_[k].begin(), other.cols_[k].end());
  }
}

void PointSet::reserve(std::size_t n) {
  for (auto& c : cols_) c.reserve(n);
}

Vector PointSet::point(std::size_t i) const {
  Vector p(dim_);
  for (int k = 0; k < dim_; ++k) p(k) = cols_[k][i];
  return p;
}

std::vector<const double*> PointSet::column_pointers() const {
  std::vector<const double*> out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = cols_[k].data();
  return out;
}

}  // namespace hpq
