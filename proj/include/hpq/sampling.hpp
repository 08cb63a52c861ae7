#pragma once

#include <functional>

#include "hpq/point_set.hpp"

namespace hpq {

/// Box [-R, R]^{dim-1} x [0, R] with `grid` nodes per axis.
struct SampleWindow {
  double R = 5.0;
  int grid = 64;
  int refine = 4;  // subdivisions between grid nodes when bracketing roots
};

using ImplicitFunction = std::function<double(const Vector&)>;

/// Points of {F = 0} found on the grid lines of the window: every line
/// parallel to a coordinate axis through grid nodes is scanned for sign
/// changes, each bracket refined by bisection. Exact zeros at scan nodes are
/// kept. Deterministic for a given window.
PointSet sample_implicit(int dim, const ImplicitFunction& f, const SampleWindow& window);

}  // namespace hpq
