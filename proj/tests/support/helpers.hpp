#pragma once

#include <cmath>
#include <initializer_list>

#include <gtest/gtest.h>

#include "hpq/boundary_point.hpp"
#include "hpq/models.hpp"

namespace testutil {

inline hpq::Vector vec(std::initializer_list<double> xs) {
  hpq::Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// Point from its full (x, y, z) coordinates.
inline hpq::HalfSpacePoint pt(const hpq::Signature& sig, std::initializer_list<double> c) {
  return hpq::HalfSpacePoint::from_coords(sig, vec(c));
}

inline hpq::Tangent tv(std::initializer_list<double> c) {
  return hpq::Tangent::from_coords(vec(c));
}

inline double max_abs_diff(const hpq::Vector& a, const hpq::Vector& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil

#define EXPECT_VEC_NEAR(a, b, tol)                                       \
  do {                                                                   \
    const hpq::Vector _a = (a);                                          \
    const hpq::Vector _b = (b);                                          \
    ASSERT_EQ(_a.size(), _b.size());                                     \
    EXPECT_LE(testutil::max_abs_diff(_a, _b), (tol)) << _a.transpose()   \
                                                     << " vs " << _b.transpose(); \
  } while (0)
