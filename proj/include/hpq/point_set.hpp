#pragma once

#include <cstddef>
#include <vector>

#include "hpq/forms.hpp"

namespace hpq {

/// Points of R^dim stored coordinate-major (one contiguous column per axis).
class PointSet {
 public:
  explicit PointSet(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return cols_.empty() ? 0 : cols_[0].size(); }
  bool empty() const { return size() == 0; }

  void push_back(const Vector& p);
  void append(const PointSet& other);
  void reserve(std::size_t n);

  Vector point(std::size_t i) const;
  const std::vector<double>& column(int k) const { return cols_[k]; }
  std::vector<const double*> column_pointers() const;

 private:
  int dim_;
  std::vector<std::vector<double>> cols_;
};

}  // namespace hpq
