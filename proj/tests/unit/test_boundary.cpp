#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "helpers.hpp"
#include "hpq/boundary.hpp"
#include "hpq/errors.hpp"
#include "hpq/submanifolds.hpp"
#include "oracles.hpp"

using namespace hpq;
using testutil::pt;
using testutil::vec;

namespace {

std::vector<Vector> tail(const std::function<Vector(double)>& f, int from, int count) {
  std::vector<Vector> out;
  for (int n = from; n < from + count; ++n) out.push_back(f(n));
  return out;
}

std::vector<Vector> points(const PointSet& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.point(i));
  return out;
}

ImplicitFunction diagonal_plane(const Signature& sig, double offset) {
  return implicit_function(
      sig, VerticalHypersurface{make_affine_subspace(vec({offset, 0}),
                                                     (Matrix(2, 1) << 1, 1).finished())});
}

ImplicitFunction cone_at(const Signature& sig, double x0, double y0) {
  return implicit_function(sig, QuadricHypersurface{vec({x0, y0}), 0.0});
}

}  // namespace

TEST(BoundaryLimit, Examples) {
  const Signature sig(2, 1);
  const BoundaryPoint hp = boundary_limit(sig, tail([](double n) { return vec({n + 2, n}); }, 100, 8));
  EXPECT_TRUE(same_boundary_point(sig, hp, vertical_hyperplane(vec({1, 1}), 2.0), 1e-9));
  const BoundaryPoint inf = boundary_limit(sig, tail([](double n) { return vec({n * n, n}); }, 100, 8));
  EXPECT_TRUE(is_infinity(inf));
  const BoundaryPoint fin = boundary_limit(sig, tail([](double) { return vec({1, 1}); }, 0, 8));
  EXPECT_TRUE(same_boundary_point(sig, fin, finite_boundary(vec({1, 1})), 1e-12));
}

TEST(BoundaryLimit, ConvergingTailIsFinite) {
  const Signature sig(2, 1);
  const BoundaryPoint fin = boundary_limit(
      sig, tail([](double n) { return vec({1 + std::pow(10.0, -n), 2}); }, 12, 8));
  EXPECT_TRUE(same_boundary_point(sig, fin, finite_boundary(vec({1, 2})), 1e-9));
}

TEST(BoundaryLimit, Errors) {
  const Signature sig(2, 1);
  EXPECT_THROW(boundary_limit(sig, tail([](double n) { return vec({n, n}); }, 0, 3)),
               InsufficientDataError);
  EXPECT_THROW(boundary_limit(sig, tail([](double n) { return vec({std::sin(n), 0}); }, 0, 8)),
               UnclassifiableError);
  EXPECT_THROW(boundary_limit(sig, tail([](double n) { return vec({n}); }, 0, 8)), DimensionError);
}

// Property: hyperplane limits in higher signature recover the null normal and offset.
TEST(BoundaryLimit, RecoversRandomHyperplanes) {
  testgen::Gen g(61);
  const Signature sig(3, 2);
  for (int i = 0; i < 50; ++i) {
    const Vector u = g.sphere(2);
    const Vector v = g.sphere(2);
    const double a = g.uniform(-3, 3);
    auto f = [&](double n) {
      Vector w(4);
      w << (n + a) * u, n * v;
      return w;
    };
    Vector normal(4);
    normal << u, v;
    EXPECT_TRUE(same_boundary_point(sig, boundary_limit(sig, tail(f, 1000, 8)),
                                    vertical_hyperplane(normal, a), 1e-8));
  }
}

TEST(Hausdorff, SelfDistanceIsZero) {
  const Signature sig(2, 1);
  const Lightcone cone{pt(sig, {0, 0, 1})};
  const SampleWindow w{3.0, 24, 4};
  EXPECT_EQ(sampled_hausdorff(3, cone.implicit(), cone.implicit(), w), 0.0);
}

TEST(Hausdorff, ConeVersusBoundaryPlane) {
  const Signature sig(2, 1);
  const Lightcone cone{pt(sig, {0, 0, 1})};
  const ImplicitFunction floor = [](const Vector& x) { return x(2); };
  EXPECT_GE(sampled_hausdorff(3, cone.implicit(), floor, SampleWindow{1.0, 32, 4}), 0.5);
}

// The cones Q_(n,n) approach the plane x = y; the distance falls with n.
TEST(Hausdorff, ConesApproachLimitPlane) {
  const Signature sig(2, 1);
  const SampleWindow w{3.0, 64, 4};
  double prev = std::numeric_limits<double>::infinity();
  for (double n : {2.0, 5.0, 10.0}) {
    const double d = sampled_hausdorff(3, cone_at(sig, n, n), diagonal_plane(sig, 0.0), w);
    EXPECT_LT(d, prev);
    prev = d;
  }
}

// On Q_(n,n), |x - y| = z^2 / |x + y - 2n|, so inside [-3,3]^2 x [0,3] the cone
// is within 9 / ((2n - 6) sqrt 2) of the plane x = y, attained at z = 3, x + y = 6.
TEST(Hausdorff, ConeToPlaneMatchesClosedForm) {
  const Signature sig(2, 1);
  const SampleWindow w{3.0, 64, 4};
  const PointSet cone = sample_implicit(3, cone_at(sig, 10, 10), w);
  double worst = 0.0;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    const Vector p = cone.point(i);
    worst = std::max(worst, std::abs(p(0) - p(1)) / std::sqrt(2.0));
  }
  const double bound = 9.0 / (14.0 * std::sqrt(2.0));
  EXPECT_LE(worst, bound + 1e-9);
  EXPECT_GE(worst, bound - 0.02);
}

TEST(Hausdorff, AgreesWithBruteForceOracle) {
  const Signature sig(2, 1);
  const SampleWindow w{3.0, 20, 4};
  const PointSet a = sample_implicit(3, cone_at(sig, 4, 4), w);
  const PointSet b = sample_implicit(3, diagonal_plane(sig, 0.0), w);
  const double want = std::max(oracle::directed_hausdorff(points(a), points(b)),
                               oracle::directed_hausdorff(points(b), points(a)));
  for (auto backend : {kernels::Backend::Scalar, kernels::active_backend()}) {
    EXPECT_NEAR(sampled_hausdorff(a, b, backend), want, 1e-12);
  }
}

TEST(Hausdorff, EmptySampleThrows) {
  const ImplicitFunction never = [](const Vector&) { return 1.0; };
  const ImplicitFunction floor = [](const Vector& x) { return x(2) - 1.0; };
  EXPECT_THROW(sampled_hausdorff(3, never, floor, SampleWindow{1.0, 8, 2}), EmptyWindowError);
}

TEST(StratumDirections, TwoNullLines) {
  const Signature sig(2, 1);
  const auto dirs = hyperplane_stratum_directions(sig);
  ASSERT_EQ(dirs.size(), 2u);
  for (const auto& d : dirs) EXPECT_NEAR(oracle::form(1, d, d), 0.0, 0.0);
  // Distinct up to sign.
  EXPECT_GT(std::abs(std::abs(dirs[0].normalized().dot(dirs[1].normalized())) - 1.0), 0.5);
  EXPECT_THROW(hyperplane_stratum_directions(Signature(3, 2)), InvalidParameterError);
}

TEST(Sampling, PointsLieOnZeroSet) {
  const Signature sig(2, 1);
  const Lightcone cone{pt(sig, {0.5, 0.5, 1})};
  const PointSet s = cone.sample(SampleWindow{2.0, 16, 4});
  ASSERT_FALSE(s.empty());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(cone.residual(s.point(i)), 0.0, 1e-9);
}

TEST(Sampling, Deterministic) {
  const Signature sig(2, 1);
  const Lightcone cone{pt(sig, {0, 0, 1})};
  const PointSet a = cone.sample(SampleWindow{2.0, 16, 4});
  const PointSet b = cone.sample(SampleWindow{2.0, 16, 4});
  ASSERT_EQ(a.size(), b.size());
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a.column(k), b.column(k));
}
