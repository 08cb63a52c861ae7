#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gen.hpp"
#include "helpers.hpp"
#include "hpq/errors.hpp"
#include "hpq/geodesics.hpp"
#include "hpq/metric.hpp"
#include "hpq/submanifolds.hpp"
#include "oracles.hpp"

using namespace hpq;
using testutil::pt;
using testutil::tv;
using testutil::vec;

namespace {

HalfSpacePoint random_pt(testgen::Gen& g, const Signature& sig) {
  return HalfSpacePoint(sig, g.box(sig.horizontal_dim(), 2.0), g.uniform(0.25, 3.0));
}

Matrix span_of(std::initializer_list<Vector> cols) {
  Matrix m(cols.begin()->size(), static_cast<Eigen::Index>(cols.size()));
  Eigen::Index i = 0;
  for (const auto& c : cols) m.col(i++) = c;
  return m;
}

/// Signs of the metric restricted to the columns of b, counted with a dead band.
InducedSignature count_signs(const Signature& sig, const HalfSpacePoint& p, const Matrix& b) {
  Matrix gram(b.cols(), b.cols());
  for (Eigen::Index i = 0; i < b.cols(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      const Vector bi = b.col(i);
      const Vector bj = b.col(j);
      const int n = sig.horizontal_dim();
      gram(i, j) = (oracle::form(sig.nx(), bi.head(n), bj.head(n)) + bi(n) * bj(n)) /
                   (p.z() * p.z());
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  InducedSignature out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double ev = es.eigenvalues()(i) * p.z() * p.z();
    if (ev > 1e-8) {
      ++out.positive;
    } else if (ev < -1e-8) {
      ++out.negative;
    } else {
      ++out.null_rank;
    }
  }
  out.degenerate = out.null_rank > 0;
  return out;
}

}  // namespace

TEST(HypersurfaceThrough, Examples) {
  const Signature sig(2, 1);
  const auto q1 = hypersurface_through(pt(sig, {0, 0, 1}), tv({0, 0, 1}));
  ASSERT_TRUE(std::holds_alternative<QuadricHypersurface>(q1));
  EXPECT_VEC_NEAR(std::get<QuadricHypersurface>(q1).center, vec({0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(std::get<QuadricHypersurface>(q1).c, 1.0);

  const auto v = hypersurface_through(pt(sig, {0, 0, 1}), tv({1, 0, 0}));
  ASSERT_TRUE(std::holds_alternative<VerticalHypersurface>(v));
  const auto& plane = std::get<VerticalHypersurface>(v).plane;
  EXPECT_NEAR(distance_to(plane, vec({0, 5})), 0.0, 1e-14);
  EXPECT_NEAR(distance_to(plane, vec({1, 0})), 1.0, 1e-14);

  // (x0, y0) = (1, 1) - (z / w) (0, 1) = (1, 0); c = 0 - 1 + 1 = 0.
  const auto q2 = hypersurface_through(pt(sig, {1, 1, 1}), tv({0, 1, 1}));
  ASSERT_TRUE(std::holds_alternative<QuadricHypersurface>(q2));
  EXPECT_VEC_NEAR(std::get<QuadricHypersurface>(q2).center, vec({1, 0}), 1e-15);
  EXPECT_NEAR(std::get<QuadricHypersurface>(q2).c, 0.0, 1e-15);
}

TEST(HypersurfaceThrough, ZeroNormalThrows) {
  const Signature sig(2, 1);
  EXPECT_THROW(hypersurface_through(pt(sig, {0, 0, 1}), tv({0, 0, 0})), DegenerateInputError);
}

TEST(SignatureOf, Examples) {
  const Signature sig(2, 1);
  const InducedSignature s1 = signature_of(sig, QuadricHypersurface{vec({0, 0}), 1.0});
  EXPECT_EQ(s1.positive, 1);
  EXPECT_EQ(s1.negative, 1);
  EXPECT_FALSE(s1.degenerate);
  const InducedSignature s0 = signature_of(sig, QuadricHypersurface{vec({0, 0}), 0.0});
  EXPECT_EQ(s0.positive, 1);
  EXPECT_EQ(s0.negative, 0);
  EXPECT_TRUE(s0.degenerate);
  const InducedSignature sv = signature_of(
      sig, VerticalHypersurface{make_affine_subspace(vec({0, 0}), span_of({vec({1, 1})}))});
  EXPECT_TRUE(sv.degenerate);
  const InducedSignature sn = signature_of(sig, QuadricHypersurface{vec({0, 0}), -1.0});
  EXPECT_EQ(sn.positive, 2);
  EXPECT_EQ(sn.negative, 0);
}

// Property: signature_of agrees with the sign count of the induced Gram matrix.
TEST(SignatureOf, MatchesInducedGram) {
  testgen::Gen g(51);
  for (const auto& sig : {Signature(2, 1), Signature(1, 2), Signature(3, 2)}) {
    for (int i = 0; i < 100; ++i) {
      const HalfSpacePoint p = random_pt(g, sig);
      const Tangent n = Tangent::from_coords(g.gaussian(sig.dim()));
      const auto h = hypersurface_through(p, n);
      const InducedSignature want = signature_of(sig, h);
      const InducedSignature got = count_signs(sig, p, tangent_basis(sig, h, p));
      EXPECT_EQ(got.positive, want.positive);
      EXPECT_EQ(got.negative, want.negative);
      EXPECT_EQ(got.degenerate, want.degenerate);
    }
  }
}

TEST(Contains, Examples) {
  const Signature sig(2, 1);
  EXPECT_TRUE(contains(sig, QuadricHypersurface{vec({0, 0}), 1.0}, pt(sig, {0, 0, 1}), 1e-12));
  EXPECT_TRUE(contains(sig, QuadricHypersurface{vec({0, 0}), 0.0}, pt(sig, {0, 1, 1}), 1e-12));
  const VerticalHypersurface x0{make_affine_subspace(vec({0, 0}), span_of({vec({0, 1})}))};
  EXPECT_FALSE(contains(sig, x0, pt(sig, {1, 0, 1}), 1e-12));
  EXPECT_TRUE(contains(sig, x0, pt(sig, {0, 7, 3}), 1e-12));
}

TEST(Lightcone, Examples) {
  const Signature sig(2, 1);
  const Lightcone cone{pt(sig, {0, 0, 1})};
  EXPECT_TRUE(cone.contains(pt(sig, {0, 1, 2}), 1e-12));
  EXPECT_TRUE(cone.contains(pt(sig, {0, 0, 1}), 1e-12));
  EXPECT_FALSE(cone.contains(pt(sig, {1, 0, 1}), 1e-12));
}

// Property: lightlike geodesics from the apex stay on its lightcone.
TEST(Lightcone, ContainsNullGeodesicsFromApex) {
  testgen::Gen g(52);
  const Signature sig(2, 1);
  const HalfSpacePoint apex = pt(sig, {0.5, -0.2, 1.3});
  const Lightcone cone{apex};
  for (int i = 0; i < 20; ++i) {
    // Null: u_y^2 = u_x^2 + w^2.
    const double ux = g.uniform(-1, 1);
    const double wz = g.uniform(-1, 1);
    const double uy = (g.coin() ? 1.0 : -1.0) * std::sqrt(ux * ux + wz * wz);
    const Tangent v = Tangent::from_coords(vec({ux, uy, wz}));
    const GeodesicDescriptor d = classify_geodesic(apex, v);
    const double t0 = parameter_of(d, apex);
    for (double dt : {-0.2, -0.1, 0.1, 0.2}) {
      const auto dom = parameter_domain(d);
      const double t = t0 + dt * std::max(1.0, std::abs(t0));
      if (!(t > dom.first && t < dom.second)) continue;
      EXPECT_NEAR(cone.residual(evaluate_geodesic(d, t).coords()), 0.0, 1e-9);
    }
  }
}

TEST(SubmanifoldThrough, Examples) {
  const Signature sig(2, 1);
  const auto vline = submanifold_through(pt(sig, {0, 0, 1}), {tv({0, 0, 1})});
  ASSERT_TRUE(std::holds_alternative<VerticalSubmanifold>(vline));
  EXPECT_EQ(std::get<VerticalSubmanifold>(vline).plane.dim(), 0);

  const auto semi = submanifold_through(pt(sig, {0, 0, 1}), {tv({1, 0, 0})});
  ASSERT_TRUE(std::holds_alternative<QuadricSlice>(semi));
  const auto& qs = std::get<QuadricSlice>(semi);
  EXPECT_VEC_NEAR(qs.center, vec({0, 0}), 1e-14);
  EXPECT_NEAR(qs.c, 1.0, 1e-14);
  EXPECT_NEAR(distance_to(qs.plane, vec({3, 0})), 0.0, 1e-14);
  EXPECT_NEAR(distance_to(qs.plane, vec({0, 1})), 1.0, 1e-14);

  const auto vplane = submanifold_through(pt(sig, {0, 0, 1}), {tv({1, 0, 0}), tv({0, 0, 1})});
  ASSERT_TRUE(std::holds_alternative<VerticalSubmanifold>(vplane));
  EXPECT_NEAR(distance_to(std::get<VerticalSubmanifold>(vplane).plane, vec({4, 0})), 0.0, 1e-14);
  EXPECT_NEAR(distance_to(std::get<VerticalSubmanifold>(vplane).plane, vec({0, 1})), 1.0, 1e-14);
}

TEST(SubmanifoldThrough, DependentTangentsThrow) {
  const Signature sig(2, 1);
  EXPECT_THROW(submanifold_through(pt(sig, {0, 0, 1}), {tv({1, 0, 0}), tv({2, 0, 0})}),
               DegenerateInputError);
  EXPECT_THROW(submanifold_through(pt(sig, {0, 0, 1}), {}), DegenerateInputError);
}

// Property: geodesics tangent to a totally geodesic hypersurface stay on it.
TEST(TotallyGeodesic, IntegratedGeodesicsStayOnHypersurface) {
  testgen::Gen g(53);
  for (const auto& sig : {Signature(2, 1), Signature(1, 2), Signature(3, 2)}) {
    for (int i = 0; i < 20; ++i) {
      const HalfSpacePoint p = random_pt(g, sig);
      const auto h = hypersurface_through(p, Tangent::from_coords(g.gaussian(sig.dim())));
      const Matrix b = tangent_basis(sig, h, p);
      const Vector t = b * g.gaussian(static_cast<int>(b.cols()));
      const Tangent v = Tangent::from_coords(t * (0.5 * p.z() / t.norm()));
      const GeodesicPath path = integrate_geodesic(p, v, 0.5, 1e-3);
      double worst = 0.0;
      for (const auto& s : path.samples) {
        worst = std::max(worst, std::abs(hypersurface_residual(sig, h, s.position.coords())));
      }
      EXPECT_LE(worst, 1e-7);
    }
  }
}

TEST(TotallyGeodesic, SubmanifoldContainsItsGeodesics) {
  testgen::Gen g(54);
  const Signature sig(3, 2);
  for (int i = 0; i < 30; ++i) {
    const HalfSpacePoint p = random_pt(g, sig);
    std::vector<Tangent> w{Tangent::from_coords(g.gaussian(5)), Tangent::from_coords(g.gaussian(5))};
    const auto s = submanifold_through(p, w);
    EXPECT_NEAR(submanifold_residual(sig, s, p.coords()), 0.0, 1e-10);
    const Matrix b = tangent_basis(sig, s, p);
    ASSERT_EQ(b.cols(), 2);
    const Vector t = b * g.gaussian(2);
    const Tangent v = Tangent::from_coords(t * (0.5 * p.z() / t.norm()));
    const GeodesicPath path = integrate_geodesic(p, v, 0.5, 1e-3);
    for (const auto& st : path.samples) {
      EXPECT_LE(submanifold_residual(sig, s, st.position.coords()), 1e-7);
    }
  }
}

TEST(QuadricResiduals, MatchPointwise) {
  testgen::Gen g(55);
  const Signature sig(3, 2);
  const QuadricHypersurface q{g.box(4, 1.0), 0.7};
  PointSet pts(5);
  for (int i = 0; i < 257; ++i) pts.push_back(random_pt(g, sig).coords());
  const auto r = quadric_residuals(sig, q, pts);
  ASSERT_EQ(r.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(r[i], hypersurface_residual(sig, q, pts.point(i)), 1e-12);
  }
}

TEST(AffineSubspace, DependentColumnsThrow) {
  EXPECT_THROW(make_affine_subspace(vec({0, 0}), span_of({vec({1, 1}), vec({2, 2})})),
               DegenerateInputError);
}
