// One PASS/FAIL line per acceptance criterion. All tolerances are fixed here.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gen.hpp"
#include "hpq/boundary.hpp"
#include "hpq/geodesics.hpp"
#include "hpq/horospheres.hpp"
#include "hpq/isometries.hpp"
#include "hpq/submanifolds.hpp"
#include "oracles.hpp"

using namespace hpq;

namespace {

// Tolerances.
constexpr double kPullbackTol = 1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kRoundTripTol = 1e-10;
constexpr double kPiTol = 1e-6;
constexpr double kLogTanhTol = 1e-8;
constexpr double kEccTol = 1e-9;
constexpr double kSemicircleTol = 1e-12;
constexpr double kClosedFormResidualTol = 1e-6;
constexpr double kIntegratedConicTol = 1e-5;
constexpr double kTotallyGeodesicTol = 1e-5;
constexpr double kInversionTol = 1e-10;
constexpr double kHoroMembershipTol = 1e-8;
constexpr double kOrthogonalityTol = 1e-7;
constexpr double kHausdorffFinalTol = 0.05;
constexpr double kLimitTol = 1e-6;
constexpr double kEndpointTol = 1e-8;
constexpr double kGroupTol = 1e-10;
constexpr double kTransitivityTol = 1e-9;

// Sizes and parameters.
constexpr int kEmbeddingSamples = 1000;
constexpr double kStep = 1e-3;
constexpr int kEccentricitySamples = 500;
constexpr int kTotallyGeodesicTriples = 200;
constexpr int kInversionSamples = 1000;
constexpr int kHoroPoints = 500;
constexpr int kHoroGeodesics = 50;
constexpr int kEndpointPairs = 200;
constexpr int kWords = 200;
constexpr int kTargets = 100;

const std::vector<Signature> kSignatures{Signature(2, 1), Signature(1, 2), Signature(3, 2)};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

HalfSpacePoint random_point(testgen::Gen& g, const Signature& sig) {
  return HalfSpacePoint(sig, g.box(sig.horizontal_dim(), 2.0), g.uniform(0.25, 3.0));
}

double quad(const Signature& sig, const Vector& c) {
  const int n = sig.horizontal_dim();
  return oracle::form(sig.nx(), c.head(n), c.head(n)) + c(n) * c(n);
}

Tangent random_typed(testgen::Gen& g, const Signature& sig, CausalType type) {
  for (;;) {
    const Vector c = g.gaussian(sig.dim());
    const double q = quad(sig, c);
    if (type == CausalType::Spacelike && q > 0.05 * c.squaredNorm()) return Tangent::from_coords(c);
    if (type == CausalType::Timelike && q < -0.05 * c.squaredNorm()) return Tangent::from_coords(c);
  }
}

BoundaryPoint random_boundary(testgen::Gen& g, const Signature& sig, int stratum) {
  if (stratum == 0) return finite_boundary(g.box(sig.horizontal_dim(), 2.0));
  if (stratum == 1) {
    Vector n(sig.horizontal_dim());
    n << g.sphere(sig.nx()), g.sphere(sig.ny());
    return vertical_hyperplane(n, g.uniform(-2.0, 2.0));
  }
  return boundary_infinity();
}

IsometryG random_g(testgen::Gen& g, const Signature& sig) {
  const int n = sig.horizontal_dim();
  const Matrix m = 0.4 * Matrix(g.gaussian(n * n).reshaped(n, n));
  Matrix a = indefinite_orthogonal_exp(sig, Matrix(0.5 * (m - m.transpose())));
  if (g.coin()) a.row(0) *= -1.0;
  return make_isometry(sig, g.uniform(0.5, 2.0), a, g.box(n, 1.0));
}

double rel(const Vector& a, const Vector& b) {
  return (a - b).cwiseAbs().maxCoeff() / (1.0 + b.norm());
}

// 1. Embedding isometry.
Outcome criterion1() {
  testgen::Gen g(1001);
  double pull = 0.0;
  double norm = 0.0;
  double trip = 0.0;
  for (const auto& sig : kSignatures) {
    for (int i = 0; i < kEmbeddingSamples; ++i) {
      const HalfSpacePoint p = random_point(g, sig);
      const Tangent v = Tangent::from_coords(g.gaussian(sig.dim()));
      const Tangent w = Tangent::from_coords(g.gaussian(sig.dim()));
      const double ambient =
          oracle::form(sig.p(), embed_differential(p, v), embed_differential(p, w));
      pull = std::max(pull, std::abs(ambient - metric_value(p, v, w)));
      const Vector x = embed_coords(p);
      norm = std::max(norm, std::abs(oracle::form(sig.p(), x, x) + 1.0));
      trip = std::max(trip, rel(unembed(embed(p)).coords(), p.coords()));
    }
  }
  return {pull <= kPullbackTol && norm <= kNormTol && trip <= kRoundTripTol,
          fmt("pullback %.2e", pull) + fmt(", norm %.2e", norm) + fmt(", round trip %.2e", trip)};
}

// 2. Timelike hyperbola length.
Outcome criterion2() {
  const Signature sig(2, 1);
  const auto d = classify_geodesic(HalfSpacePoint(sig, Vector::Zero(2), 1.0),
                                   Tangent::from_coords((Vector(3) << 0.0, 1.0, 0.0).finished()));
  const double len = arc_length(d, -20.0, 20.0);
  const double err = std::abs(len - std::numbers::pi);
  return {d.variant == GeodesicVariant::TimelikeHyperbola && err <= kPiTol,
          fmt("length %.12f", len) + fmt(", error %.2e", err)};
}

// 3. Spacelike hyperbola length.
Outcome criterion3() {
  const Signature sig(2, 1);
  // The branches of -s^2 + z^2 = -1 over (0, 0): s = +-cosh t, z = sinh t.
  const auto h = geodesic_between(sig, finite_boundary((Vector(2) << 0.0, -1.0).finished()),
                                   finite_boundary((Vector(2) << 0.0, 1.0).finished()));
  const auto& piece = std::get<GeodesicConnection>(h).pieces.at(0);
  const double len = arc_length(piece, 0.5, 2.0);
  const double want = std::log(std::tanh(1.0)) - std::log(std::tanh(0.25));
  const double err = std::abs(len - want);
  return {piece.variant == GeodesicVariant::SpacelikeHyperbola && err <= kLogTanhTol,
          fmt("length %.12f", len) + fmt(", expected %.12f", want) + fmt(", error %.2e", err)};
}

// 4. Eccentricity formulas.
Outcome criterion4() {
  testgen::Gen g(1004);
  double worst = 0.0;
  int checked = 0;
  for (int i = 0; checked < kEccentricitySamples; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    const CausalType type = i % 2 == 0 ? CausalType::Spacelike : CausalType::Timelike;
    const auto d = classify_geodesic(random_point(g, sig), random_typed(g, sig, type));
    if (d.variant == GeodesicVariant::VerticalLine || d.variant == GeodesicVariant::Parabola) continue;
    const double want = type == CausalType::Timelike ? eccentricity_timelike(sig, d.direction)
                                                     : eccentricity_spacelike(sig, d.direction);
    const double got = oracle::conic_eccentricity(d.kappa, 0.0, 1.0, 2.0 * d.A, 0.0, -d.C);
    worst = std::max({worst, std::abs(got - want), std::abs(d.eccentricity.value_or(NAN) - want)});
    ++checked;
  }
  double semi = 0.0;
  for (const auto& sig : {Signature(2, 1), Signature(3, 2)}) {
    for (int i = 0; i < 20; ++i) {
      Vector c = Vector::Zero(sig.dim());
      c.head(sig.nx()) = g.gaussian(sig.nx());
      c(sig.dim() - 1) = g.normal();
      const auto d = classify_geodesic(random_point(g, sig), Tangent::from_coords(c));
      semi = std::max({semi, std::abs(d.eccentricity.value_or(NAN)),
                       std::abs(eccentricity_spacelike(sig, d.direction))});
    }
  }
  return {worst <= kEccTol && semi <= kSemicircleTol,
          std::to_string(checked) + fmt(" tangents, max error %.2e", worst) +
              fmt(", semicircle %.2e", semi)};
}

std::vector<std::pair<Signature, Vector>> variant_tangents() {
  auto v = [](std::initializer_list<double> c) {
    Vector out(static_cast<Eigen::Index>(c.size()));
    std::copy(c.begin(), c.end(), out.data());
    return out;
  };
  const Signature s21(2, 1);
  const Signature s32(3, 2);
  return {
      {s21, v({0, 0, 1})},       {s21, v({1, 0, 0.3})},     {s21, v({1, 1, 1})},
      {s21, v({0.3, 1, 1.5})},   {s21, v({0, 1, 0.5})},     {s21, v({0, 1, 1})},
      {s21, v({1, 1, 0})},       {s32, v({1, 0.5, 0, 0, 0.7})}, {s32, v({0.6, 0.8, 1, 0, 0.4})},
      {s32, v({0.2, 0, 0.5, 0.5, 2})}, {s32, v({0, 0.3, 1, 0.2, 0.1})},
  };
}

// 5. Geodesic ODE consistency.
Outcome criterion5() {
  testgen::Gen g(1005);
  double closed = 0.0;
  std::string worst_variant;
  int variants_seen = 0;
  std::vector<bool> seen(7, false);
  auto descriptors = variant_tangents();
  for (int i = 0; i < 60; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    descriptors.emplace_back(sig, g.gaussian(sig.dim()));
  }
  for (const auto& [sig, t] : descriptors) {
    const auto d = classify_geodesic(random_point(g, sig), Tangent::from_coords(t));
    const auto samples = affine_window_samples(d, kStep);
    const double r = geodesic_residual(sig, samples, kStep);
    if (!seen[static_cast<int>(d.variant)]) ++variants_seen;
    seen[static_cast<int>(d.variant)] = true;
    if (r > closed) {
      closed = r;
      worst_variant = to_string(d.variant);
    }
  }
  double integrated = 0.0;
  int runs = 0;
  auto tangents = variant_tangents();
  for (int i = 0; i < 150; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    tangents.emplace_back(sig, g.gaussian(sig.dim()));
  }
  for (const auto& [sig, t] : tangents) {
    const HalfSpacePoint p = random_point(g, sig);
    const double q = quad(sig, t);
    Vector c = t * (p.z() / std::sqrt(std::abs(q) > 1e-2 * t.squaredNorm() ? std::abs(q) : t.squaredNorm()));
    const auto d = classify_geodesic(p, Tangent::from_coords(c));
    // Run one unit of the integrator's parameter in a direction that stays in the chart.
    const auto [lo, hi] = affine_domain(d);
    const double r0 = affine_parameter_of(d, p);
    const double e = 1e-6;
    const Vector dr = (evaluate_affine(d, r0 + e).coords() - evaluate_affine(d, r0 - e).coords()) / (2 * e);
    const double rate = c.norm() / dr.norm() * (dr.dot(c) > 0 ? 1.0 : -1.0);
    auto inside = [&](double r1) {
      if (!(r1 > lo && r1 < hi)) return false;
      const double z = evaluate_affine(d, r1).z();
      return z < 100.0 * p.z() && z > 1e-2 * p.z();
    };
    if (!inside(r0 + rate)) {
      if (!inside(r0 - rate)) continue;
      c = -c;
    }
    const GeodesicPath path = integrate_geodesic(p, Tangent::from_coords(c), 1.0, kStep);
    ++runs;
    for (const auto& s : path.samples) {
      const double scale = 1.0 + s.position.coords().squaredNorm();
      integrated = std::max({integrated, std::abs(conic_residual(d, s.position)) / scale,
                             plane_offset(d, s.position)});
    }
  }
  return {closed <= kClosedFormResidualTol && integrated <= kIntegratedConicTol && variants_seen == 7,
          std::to_string(variants_seen) + " variants" + fmt(", closed-form residual %.2e", closed) +
              " (" + worst_variant + ")" + fmt(", integrated deviation %.2e", integrated) +
              " over " + std::to_string(runs) + " runs"};
}

// 6. Totally geodesic hypersurfaces.
Outcome criterion6() {
  testgen::Gen g(1006);
  double worst = 0.0;
  for (int i = 0; i < kTotallyGeodesicTriples; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    const HalfSpacePoint p = random_point(g, sig);
    const auto h = hypersurface_through(p, Tangent::from_coords(g.gaussian(sig.dim())));
    const Matrix b = tangent_basis(sig, h, p);
    const Vector t = b * g.gaussian(static_cast<int>(b.cols()));
    const Tangent v = Tangent::from_coords(t * (p.z() / t.norm()));
    const GeodesicPath path = integrate_geodesic(p, v, 0.5, kStep);
    for (const auto& s : path.samples) {
      worst = std::max(worst, std::abs(hypersurface_residual(sig, h, s.position.coords())));
    }
  }
  return {worst <= kTotallyGeodesicTol, fmt("max residual %.2e", worst)};
}

// 7. Inversion laws.
Outcome criterion7() {
  testgen::Gen g(1007);
  double inv = 0.0;
  double mus = 0.0;
  double refl = 0.0;
  int n = 0;
  while (n < kInversionSamples) {
    const Signature& sig = kSignatures[n % kSignatures.size()];
    const HalfSpacePoint p = random_point(g, sig);
    const double m = quad(sig, p.coords());
    if (std::abs(m) <= 0.05 * p.coords().squaredNorm()) continue;
    const HalfSpacePoint jp = inversion_apply(p);
    inv = std::max(inv, rel(inversion_apply(jp).coords(), p.coords()));
    mus = std::max(mus, std::abs(mu(jp) * mu(p) - 1.0));
    Vector reflected = oracle::embed(sig.p(), sig.q(), p.x(), p.y(), p.z());
    reflected(sig.p() - 1) *= -1.0;
    const double sign = mu(p) > 0 ? 1.0 : -1.0;
    refl = std::max(refl, rel(oracle::embed(sig.p(), sig.q(), jp.x(), jp.y(), jp.z()),
                              Vector(sign * reflected)));
    ++n;
  }
  return {inv <= kInversionTol && mus <= kInversionTol && refl <= kInversionTol,
          fmt("J^2 %.2e", inv) + fmt(", mu product %.2e", mus) + fmt(", reflection %.2e", refl)};
}

std::optional<HalfSpacePoint> on_horosphere(testgen::Gen& g, const Signature& sig,
                                            const Horosphere& h) {
  const Vector w = g.box(sig.horizontal_dim(), 2.0);
  double z = 0.0;
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    z = pl->c;
  } else if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    z = wd->c * std::abs(oracle::form(sig.nx(), w, wd->normal) + wd->d);
  } else {
    const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
    const Vector r = w - pq.center;
    const double f = oracle::form(sig.nx(), r, r);
    const double disc = pq.c * pq.c - f;
    if (disc < 0.0) return std::nullopt;
    const double roots[3] = {pq.c + std::sqrt(disc), pq.c - std::sqrt(disc), -pq.c + std::sqrt(disc)};
    z = roots[g.integer(0, 2)];
  }
  if (!(z > 1e-2)) return std::nullopt;
  return HalfSpacePoint(sig, w, z);
}

// 8. Horosphere oracle equivalence.
Outcome criterion8() {
  testgen::Gen g(1008);
  int disagreements = 0;
  int on = 0;
  double ortho = 0.0;
  int min_tested = kHoroGeodesics;
  for (const auto& sig : {Signature(2, 1), Signature(3, 2)}) {
    for (int stratum = 0; stratum < 3; ++stratum) {
      for (int i = 0; i < kHoroPoints; ++i) {
        const auto h = horosphere_from(sig, random_boundary(g, sig, stratum), g.uniform(0.5, 2.0));
        const LevelSetOracle level = level_set_for(sig, h);
        std::optional<HalfSpacePoint> p;
        if (i % 2 == 0) p = on_horosphere(g, sig, h);
        if (p) ++on;
        if (!p) p = random_point(g, sig);
        if (horosphere_contains(sig, h, *p, kHoroMembershipTol) !=
            level.contains(*p, kHoroMembershipTol)) {
          ++disagreements;
        }
      }
      const auto h = horosphere_from(sig, random_boundary(g, sig, stratum), 1.0);
      const auto report = orthogonality_residual(sig, h, kHoroGeodesics, g.integer(0, 1 << 30));
      ortho = std::max(ortho, report.max_residual);
      min_tested = std::min(min_tested, report.tested);
    }
  }
  return {disagreements == 0 && ortho <= kOrthogonalityTol && min_tested == kHoroGeodesics,
          std::to_string(disagreements) + " disagreements (" + std::to_string(on) +
              " on-surface points)" + fmt(", orthogonality %.2e", ortho) + " over >= " +
              std::to_string(min_tested) + " geodesics"};
}

// 9. Boundary convergence of the lightcones over (n + 2, n).
Outcome criterion9() {
  const Signature sig(2, 1);
  std::vector<Vector> tail;
  for (int n = 100; n < 108; ++n) tail.push_back((Vector(2) << n + 2.0, 1.0 * n).finished());
  const BoundaryPoint limit = boundary_limit(sig, tail);
  const bool limit_ok =
      same_boundary_point(sig, limit, vertical_hyperplane((Vector(2) << 1.0, 1.0).finished(), 2.0), kLimitTol);
  const VerticalHypersurface plane{make_affine_subspace((Vector(2) << 1.0, -1.0).finished(),
                                                        (Matrix(2, 1) << 1.0, 1.0).finished())};
  const auto target = implicit_function(sig, TotallyGeodesicHypersurface(plane));
  const SampleWindow window{3.0, 64, 4};
  std::string detail = std::string("limit ") + (limit_ok ? "x - y = 2" : "wrong") + ", distances";
  bool monotone = true;
  double previous = INFINITY;
  for (int n : {4, 8, 16, 32}) {
    const QuadricHypersurface q{(Vector(2) << n + 2.0, 1.0 * n).finished(), 0.0};
    const double dist =
        sampled_hausdorff(3, implicit_function(sig, TotallyGeodesicHypersurface(q)), target, window);
    monotone = monotone && dist < previous;
    previous = dist;
    detail += fmt(" %.4f", dist);
  }
  return {limit_ok && monotone && previous <= kHausdorffFinalTol,
          detail + (monotone ? " (monotone)" : " (not monotone)") +
              fmt(", bound at n = 32 is %.2f", kHausdorffFinalTol)};
}

// 10. Endpoint trichotomy.
Outcome criterion10() {
  const Signature sig(2, 1);
  auto fin = [](double a, double b) { return finite_boundary((Vector(2) << a, b).finished()); };
  bool examples = true;
  {
    const auto e = geodesic_between(sig, fin(-1, 0), fin(1, 0));
    const auto* c = std::get_if<GeodesicConnection>(&e);
    examples = examples && c && c->pieces.size() == 1 &&
               c->pieces[0].variant == GeodesicVariant::Ellipse && c->pieces[0].C == 1.0 &&
               c->pieces[0].eccentricity == 0.0;
  }
  {
    const auto h = geodesic_between(sig, fin(0, -1), fin(0, 1));
    const auto* c = std::get_if<GeodesicConnection>(&h);
    examples = examples && c && c->pieces.size() == 2;
    if (c && c->pieces.size() == 2) {
      for (const auto& d : c->pieces) {
        examples = examples && d.variant == GeodesicVariant::SpacelikeHyperbola && d.kappa == -1.0 &&
                   d.C == -1.0 && std::abs(*d.eccentricity - std::sqrt(2.0)) <= 1e-15;
      }
      examples = examples && c->pieces[0].branch != c->pieces[1].branch;
    }
  }
  examples = examples && std::holds_alternative<NoGeodesic>(geodesic_between(sig, fin(0, 0), fin(1, 1)));

  testgen::Gen g(1010);
  int pairs = 0;
  int failures = 0;
  while (pairs < kEndpointPairs) {
    const Signature& s = pairs % 2 == 0 ? Signature(2, 1) : Signature(3, 2);
    const BoundaryPoint a = random_boundary(g, s, 0);
    const int kind = g.integer(0, 2);
    const BoundaryPoint b = random_boundary(g, s, kind);
    const auto res = geodesic_between(s, a, b);
    if (std::holds_alternative<NoGeodesic>(res)) continue;
    std::vector<BoundaryPoint> got;
    for (const auto& piece : std::get<GeodesicConnection>(res).pieces) {
      const auto ends = endpoints(piece);
      if (ends.first) got.push_back(*ends.first);
      if (ends.second) got.push_back(*ends.second);
    }
    auto has = [&](const BoundaryPoint& x) {
      return std::any_of(got.begin(), got.end(),
                         [&](const BoundaryPoint& y) { return same_boundary_point(s, x, y, kEndpointTol); });
    };
    if (got.size() != 2 || !has(a) || !has(b)) ++failures;
    ++pairs;
  }
  return {examples && failures == 0,
          std::string("worked examples ") + (examples ? "match" : "differ") + ", " +
              std::to_string(failures) + " of " + std::to_string(pairs) + " pairs fail"};
}

// 11. Group laws and transitivity.
Outcome criterion11() {
  testgen::Gen g(1011);
  double compose = 0.0;
  double inverse = 0.0;
  double words = 0.0;
  for (int i = 0; i < kWords; ++i) {
    const Signature& sig = kSignatures[i % kSignatures.size()];
    const int len = g.integer(1, 6);
    std::vector<IsometryG> gs;
    IsometryG total = identity_isometry(sig);
    for (int k = 0; k < len; ++k) {
      gs.push_back(random_g(g, sig));
      total = g_compose(total, gs.back());
    }
    const HalfSpacePoint p = random_point(g, sig);
    HalfSpacePoint q = p;
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) q = g_apply(*it, q);
    compose = std::max(compose, rel(g_apply(total, p).coords(), q.coords()));
    inverse = std::max(inverse, rel(g_apply(g_compose(total, g_inverse(sig, total)), p).coords(), p.coords()));

    IsometryWord w;
    for (int k = 0; k < len; ++k) {
      if (g.coin()) {
        w.letters.push_back(InversionJ{});
      } else {
        w.letters.push_back(random_g(g, sig));
      }
    }
    // Letters of w inverted, in reverse order.
    IsometryWord inv;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      if (const auto* gl = std::get_if<IsometryG>(&*it)) {
        inv.letters.push_back(g_inverse(sig, *gl));
      } else {
        inv.letters.push_back(InversionJ{});
      }
    }
    words = std::max(words, rel(word_apply(inv, word_apply(w, p)).coords(), p.coords()));
  }
  int misses = 0;
  for (int i = 0; i < kTargets; ++i) {
    const Signature& sig = i % 2 == 0 ? Signature(2, 1) : Signature(3, 2);
    const BoundaryPoint target = random_boundary(g, sig, i % 3);
    const IsometryWord w = transitivity_word(sig, target);
    const BoundaryPoint origin = finite_boundary(Vector::Zero(sig.horizontal_dim()));
    if (!same_boundary_point(sig, word_boundary_apply(sig, w, origin), target, kTransitivityTol)) ++misses;
  }
  return {compose <= kGroupTol && inverse <= kGroupTol && words <= kGroupTol && misses == 0,
          fmt("compose %.2e", compose) + fmt(", inverse %.2e", inverse) + fmt(", word inverse %.2e", words) +
              ", " + std::to_string(misses) + " of " + std::to_string(kTargets) + " targets missed"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"embedding isometry", criterion1},
      {"timelike hyperbola length pi", criterion2},
      {"spacelike hyperbola length", criterion3},
      {"eccentricity formulas", criterion4},
      {"geodesic equation consistency", criterion5},
      {"totally geodesic hypersurfaces", criterion6},
      {"inversion laws", criterion7},
      {"horosphere level-set equivalence", criterion8},
      {"boundary convergence of lightcones", criterion9},
      {"endpoint trichotomy", criterion10},
      {"group laws and transitivity", criterion11},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be in 1..%zu\n", criteria.size());
    return 2;
  }
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && only != static_cast<int>(k + 1)) continue;
    Outcome o{false, ""};
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
