#include "hpq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "hpq/boundary.hpp"
#include "hpq/errors.hpp"
#include "hpq/geodesics.hpp"
#include "hpq/horospheres.hpp"
#include "hpq/isometries.hpp"
#include "hpq/kernels.hpp"
#include "hpq/metric.hpp"
#include "hpq/models.hpp"
#include "hpq/random.hpp"
#include "hpq/submanifolds.hpp"

namespace hpq {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.skipped || c.passed; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"embedding",   "geodesics",  "submanifolds",
                                              "boundary",    "horospheres", "isometries",
                                              "all"};
  return names;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Tally {
  double worst = 0.0;
  int cases = 0;
  std::string note;

  void add(double r) {
    const double a = std::abs(r);
    worst = std::isnan(a) ? kInf : std::max(worst, a);
    ++cases;
  }
  void require(bool ok) { add(ok ? 0.0 : 1.0); }
};

class Runner {
 public:
  Runner(const Signature& sig, std::uint64_t seed, std::vector<CheckResult>& out)
      : sig_(sig), seed_(seed), out_(out) {}

  const Signature& sig() const { return sig_; }

  /// Each check draws from its own seeded stream.
  void check(const std::string& name, double tol, const std::function<void(Tally&, Rng&)>& body) {
    CheckResult r;
    r.name = name;
    r.tolerance = tol;
    Tally t;
    Rng rng(seed_ ^ fnv1a(name));
    try {
      body(t, rng);
      r.max_residual = t.worst;
      r.cases = t.cases;
      r.passed = t.worst <= tol;
      r.note = t.note;
      if (t.cases == 0) {
        r.skipped = true;
        if (r.note.empty()) r.note = "no applicable cases for this signature";
      }
    } catch (const std::exception& e) {
      r.max_residual = kInf;
      r.passed = false;
      r.note = std::string("exception: ") + e.what();
    }
    out_.push_back(r);
  }

  void skip(const std::string& name, const std::string& reason) {
    CheckResult r;
    r.name = name;
    r.skipped = true;
    r.note = reason;
    out_.push_back(r);
  }

 private:
  Signature sig_;
  std::uint64_t seed_;
  std::vector<CheckResult>& out_;
};

bool has_timelike(const Signature& sig) { return sig.ny() > 0; }
bool has_spacelike_horizontal(const Signature& sig) { return sig.nx() > 0; }

/// Scales v to unit g-speed, or to Euclidean norm z/2 when v is null.
Tangent normalized(const HalfSpacePoint& p, const Tangent& v) {
  const double g = metric_value(p, v, v);
  const Vector c = v.coords();
  double scale;
  if (tangent_causal_type(p.sig(), v) == CausalType::Lightlike) {
    scale = 0.5 * p.z() / c.norm();
  } else {
    scale = 1.0 / std::sqrt(std::abs(g));
  }
  return Tangent::from_coords(c * scale);
}

std::vector<CausalType> available_types(const Signature& sig) {
  std::vector<CausalType> out{CausalType::Spacelike};
  if (has_timelike(sig)) out.push_back(CausalType::Timelike);
  return out;
}

/// Eccentricity of k s^2 + z^2 + 2 A s - C = 0 from the invariants of the
/// general conic a s^2 + b s z + c z^2 + d s + e z + f = 0.
double conic_eccentricity(double k, double a_lin, double c_const) {
  const double a = k;
  const double b = 0.0;
  const double c = 1.0;
  Eigen::Matrix3d m;
  m << a, b / 2.0, a_lin, b / 2.0, c, 0.0, a_lin, 0.0, -c_const;
  const double eta = m.determinant() < 0.0 ? 1.0 : -1.0;
  const double root = std::sqrt((a - c) * (a - c) + b * b);
  return std::sqrt(2.0 * root / (eta * (a + c) + root));
}

/// Point and tangent from which the integrated geodesic runs for one unit of
/// affine parameter without leaving the chart: the reference point of
/// affine_window_samples, heading toward a complete end, at unit g-speed
/// (Euclidean norm z / 2 when null).
std::pair<HalfSpacePoint, Tangent> integration_start(const GeodesicDescriptor& d) {
  double c = 0.0;
  if (d.variant == GeodesicVariant::SpacelikeHyperbola) c = 1.5;
  if (d.variant == GeodesicVariant::Parabola) c = std::log(-d.A);
  if (d.variant == GeodesicVariant::LightlikeSlantLine) c = d.slope;
  const double eps = 1e-6;
  const HalfSpacePoint p = evaluate_affine(d, c);
  const Vector fd =
      (evaluate_affine(d, c + eps).coords() - evaluate_affine(d, c - eps).coords()) / (2 * eps);
  Vector v = geodesic_velocity(d, parameter_of(d, p)).coords();
  if (v.dot(fd) < 0.0) v = -v;
  return {p, normalized(p, Tangent::from_coords(v))};
}

double sine_between(const Vector& a, const Vector& b) {
  if (a.norm() == 0.0 || b.norm() == 0.0) return 1.0;
  const Vector ah = a.normalized();
  const Vector bh = b.normalized();
  return (ah - ah.dot(bh) * bh).norm();
}

bool endpoint_matches(const Signature& sig, const std::optional<BoundaryPoint>& e,
                      const BoundaryPoint& target, double tol) {
  return e.has_value() && same_boundary_point(sig, *e, target, tol);
}

/// Whether the endpoints of the connection are exactly {b1, b2}.
bool connection_has_endpoints(const Signature& sig, const GeodesicConnection& c,
                              const BoundaryPoint& b1, const BoundaryPoint& b2, double tol) {
  if (c.pieces.size() == 1) {
    const auto [lo, hi] = endpoints(c.pieces[0]);
    return (endpoint_matches(sig, lo, b1, tol) && endpoint_matches(sig, hi, b2, tol)) ||
           (endpoint_matches(sig, lo, b2, tol) && endpoint_matches(sig, hi, b1, tol));
  }
  bool seen1 = false;
  bool seen2 = false;
  for (const auto& piece : c.pieces) {
    const auto [lo, hi] = endpoints(piece);
    for (const auto& e : {lo, hi}) {
      if (!e) continue;
      seen1 = seen1 || endpoint_matches(sig, e, b1, tol);
      seen2 = seen2 || endpoint_matches(sig, e, b2, tol);
    }
  }
  return seen1 && seen2;
}

// --- embedding --------------------------------------------------------------

void embedding_suite(Runner& run) {
  const Signature& sig = run.sig();
  run.check("hyperboloid_norm", 1e-12, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const Vector x = embed_coords(random_point(sig, rng));
      t.add(quadratic_form(sig.ambient(), x) + 1.0);
    }
  });
  run.check("chart_height_identity", 1e-12, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const Vector x = embed_coords(p);
      t.add((x(sig.index_p()) + x(sig.index_last())) * p.z() - 1.0);
    }
  });
  run.check("pullback_isometry", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const Tangent v = random_tangent(sig, rng);
      const Tangent w = random_tangent(sig, rng);
      t.add(inner_product(sig.ambient(), embed_differential(p, v), embed_differential(p, w)) -
            metric_value(p, v, w));
    }
  });
  run.check("unembed_round_trip", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      t.add((unembed(embed(p)).coords() - p.coords()).cwiseAbs().maxCoeff());
    }
  });
  run.check("differential_finite_difference", 1e-6, [&](Tally& t, Rng& rng) {
    const double eps = 1e-6;
    for (int i = 0; i < 200; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const Tangent v = random_tangent(sig, rng);
      const Vector c = p.coords();
      const Vector dv = v.coords();
      const Vector fd = (embed_coords(HalfSpacePoint::from_coords(sig, c + eps * dv)) -
                         embed_coords(HalfSpacePoint::from_coords(sig, c - eps * dv))) /
                        (2.0 * eps);
      t.add((fd - embed_differential(p, v)).cwiseAbs().maxCoeff());
    }
  });
  run.check("finite_boundary_is_null", 1e-12, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const auto bp = random_boundary_point(sig, rng, Stratum::Finite);
      t.add(quadratic_form(sig.ambient(), boundary_to_projective(sig, bp).coords()));
    }
  });
  if (has_hyperplane_stratum(sig)) {
    run.check("boundary_projective_round_trip", 1e-9, [&](Tally& t, Rng& rng) {
      for (int i = 0; i < 300; ++i) {
        const auto stratum = static_cast<Stratum>(i % 3);
        const auto bp = random_boundary_point(sig, rng, stratum);
        const auto back = projective_to_boundary(boundary_to_projective(sig, bp));
        t.require(same_boundary_point(sig, bp, back, 1e-9));
      }
    });
  } else {
    run.skip("boundary_projective_round_trip", "no hyperplane stratum for this signature");
  }
}

// --- geodesics --------------------------------------------------------------

void geodesics_suite(Runner& run) {
  const Signature& sig = run.sig();
  const int n = sig.horizontal_dim();
  const HalfSpacePoint origin(sig, Vector::Zero(n), 1.0);

  if (has_timelike(sig)) {
    run.check("timelike_length_pi", 1e-6, [&](Tally& t, Rng&) {
      Vector e = Vector::Zero(n);
      e(sig.nx()) = 1.0;
      const auto d = classify_geodesic(origin, Tangent{e, 0.0});
      t.add(arc_length(d, -20.0, 20.0) - std::numbers::pi);
    });
    run.check("spacelike_branch_length", 1e-8, [&](Tally& t, Rng&) {
      Vector a = Vector::Zero(n);
      a(sig.nx()) = -1.0;
      const auto g = geodesic_between(sig, FiniteBoundary{a}, FiniteBoundary{Vector(-a)});
      const auto& d = std::get<GeodesicConnection>(g).pieces.at(0);
      t.add(arc_length(d, 0.5, 2.0) -
            (std::log(std::tanh(1.0)) - std::log(std::tanh(0.25))));
    });
  } else {
    run.skip("timelike_length_pi", "no timelike directions for q = 0");
    run.skip("spacelike_branch_length", "no hyperbola branches for q = 0");
  }

  run.check("vertical_length", 1e-12, [&](Tally& t, Rng&) {
    const auto d = classify_geodesic(origin, Tangent{Vector::Zero(n), 1.0});
    t.add(arc_length(d, 0.0, 1.0) - 1.0);
  });

  run.check("eccentricity_conic_invariant", 1e-9, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 500; ++i) {
      const auto types = available_types(sig);
      const CausalType type = types[i % types.size()];
      const HalfSpacePoint p = random_point(sig, rng);
      Tangent v = random_tangent_of_type(sig, rng, type);
      if (v.horizontal.norm() < 1e-6) continue;
      const auto d = classify_geodesic(p, v);
      if (!d.eccentricity) continue;
      t.add(conic_eccentricity(d.kappa, d.A, d.C) - *d.eccentricity);
    }
  });
  if (has_spacelike_horizontal(sig)) {
    run.check("semicircle_eccentricity_zero", 1e-12, [&](Tally& t, Rng&) {
      Vector e = Vector::Zero(n);
      e(0) = 1.0;
      const auto d = classify_geodesic(origin, Tangent{e, 0.0});
      t.require(d.variant == GeodesicVariant::Ellipse);
      t.add(d.eccentricity.value_or(kInf));
    });
  } else {
    run.skip("semicircle_eccentricity_zero", "no x directions for p = 1");
  }

  run.check("closed_form_ode_residual", 1e-3, [&](Tally& t, Rng& rng) {
    const double step = 1e-3;
    for (int i = 0; i < 60; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const Tangent v = random_tangent(sig, rng);
      const auto d = classify_geodesic(p, v);
      t.add(geodesic_residual(sig, affine_window_samples(d, step), step));
    }
    t.note = "second differences at step 1e-3 carry O(step^2) truncation";
  });
  run.check("straight_line_is_not_geodesic", 0.0, [&](Tally& t, Rng&) {
    std::vector<Vector> line;
    for (int i = 0; i <= 1000; ++i) {
      Vector c = Vector::Zero(sig.dim());
      c(sig.dim() - 1) = 1.0;
      if (sig.dim() > 1) {
        c(0) = i * 1e-3;
      } else {
        c(0) += i * 1e-3;
      }
      line.push_back(c);
    }
    t.require(geodesic_residual(sig, line, 1e-3) >= 0.5);
  });

  run.check("integrated_stays_on_conic", 1e-5, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 40; ++i) {
      const auto d = classify_geodesic(random_point(sig, rng), random_tangent(sig, rng));
      const auto [p, v] = integration_start(d);
      const auto path = integrate_geodesic(p, v, 1.0, 1e-3);
      for (const auto& s : path.samples) {
        t.add(conic_residual(d, s.position));
        t.add(plane_offset(d, s.position));
      }
    }
  });

  run.check("classify_round_trip", 1e-9, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 300; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const Tangent v = random_tangent(sig, rng);
      const auto d = classify_geodesic(p, v);
      const double s = parameter_of(d, p);
      const Vector q = evaluate_geodesic(d, s).coords();
      t.add((q - p.coords()).norm() / (1.0 + p.coords().norm()));
      t.add(sine_between(geodesic_velocity(d, s).coords(), v.coords()));
    }
  });

  run.check("causal_sign_along_curve", 0.0, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 40; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      const auto d = classify_geodesic(p, random_tangent(sig, rng));
      if (d.causal == CausalType::Lightlike) continue;
      const auto [lo, hi] = parameter_domain(d);
      const double a = std::isfinite(lo) ? lo : -5.0;
      const double b = std::isfinite(hi) ? hi : 5.0;
      for (int k = 0; k < 100; ++k) {
        const double s = rng.uniform(a, b);
        if (s <= lo || s >= hi) continue;
        const HalfSpacePoint q = evaluate_geodesic(d, s);
        const double g = metric_value(q, geodesic_velocity(d, s), geodesic_velocity(d, s));
        t.require(d.causal == CausalType::Spacelike ? g > 0.0 : g < 0.0);
      }
    }
  });

  run.check("integrated_plane_section", 1e-5, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 30; ++i) {
      const auto d = classify_geodesic(random_point(sig, rng), random_tangent(sig, rng));
      const auto [p, v] = integration_start(d);
      const auto path = integrate_geodesic(p, v, 1.0, 1e-3);
      const Vector x0 = embed_coords(p);
      const Vector x1 = embed_differential(p, v);
      Matrix basis(x0.size(), 2);
      basis << x0, x1;
      const Eigen::HouseholderQR<Matrix> qr(basis);
      const Matrix q = qr.householderQ() * Matrix::Identity(x0.size(), 2);
      for (const auto& s : path.samples) {
        const Vector x = embed_coords(s.position);
        t.add((x - q * (q.transpose() * x)).norm() / x.norm());
      }
    }
  });

  if (n >= 2 && sig.nx() >= 1 && sig.ny() >= 1) {
    run.check("endpoints_of_geodesic_between", 1e-8, [&](Tally& t, Rng& rng) {
      int found = 0;
      while (found < 200) {
        const Stratum s2 = static_cast<Stratum>(found % 3);
        const auto b1 = random_boundary_point(sig, rng, Stratum::Finite);
        const auto b2 = random_boundary_point(sig, rng, s2);
        const auto g = geodesic_between(sig, b1, b2);
        const auto* c = std::get_if<GeodesicConnection>(&g);
        if (!c) continue;
        ++found;
        t.require(connection_has_endpoints(sig, *c, b1, b2, 1e-8));
      }
    });
  } else {
    run.skip("endpoints_of_geodesic_between", "needs p >= 2 and q >= 1");
  }
}

// --- submanifolds -----------------------------------------------------------

void submanifolds_suite(Runner& run) {
  const Signature& sig = run.sig();
  const int n = sig.horizontal_dim();
  const Vector flat = flat_metric_diagonal(sig);

  run.check("hypersurface_contains_point", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 200; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      Tangent nv = random_tangent(sig, rng);
      if (i % 4 == 0) nv.w = 0.0;
      if (nv.coords().norm() < 1e-3) continue;
      const auto h = hypersurface_through(p, nv);
      t.add(hypersurface_residual(sig, h, p.coords()));
    }
  });
  run.check("hypersurface_flat_orthogonal", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 200; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      Tangent nv = random_tangent(sig, rng);
      if (i % 4 == 0) nv.w = 0.0;
      if (nv.coords().norm() < 1e-3) continue;
      const Vector nc = nv.coords().normalized();
      const auto h = hypersurface_through(p, nv);
      const Matrix b = tangent_basis(sig, h, p);
      t.require(b.cols() == sig.dim() - 1);
      for (Eigen::Index k = 0; k < b.cols(); ++k) {
        t.add(nc.dot(flat.asDiagonal() * b.col(k).normalized()));
      }
    }
  });
  run.check("totally_geodesic", 1e-5, [&](Tally& t, Rng& rng) {
    int skipped = 0;
    for (int i = 0; i < 200; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      Tangent nv = random_tangent(sig, rng);
      if (i % 4 == 0) nv.w = 0.0;
      if (nv.coords().norm() < 1e-3) continue;
      const auto h = hypersurface_through(p, nv);
      const Matrix b = tangent_basis(sig, h, p);
      if (b.cols() == 0) continue;
      Vector dir = b * rng.normal_vector(static_cast<int>(b.cols()));
      dir *= 0.25 * p.z() / dir.norm();
      const auto path = integrate_geodesic(p, Tangent::from_coords(dir), 0.5, 1e-3);
      if (path.halted_early) {
        ++skipped;
        continue;
      }
      for (const auto& s : path.samples) {
        t.add(hypersurface_residual(sig, h, s.position.coords()));
      }
    }
    if (skipped > 0) t.note = std::to_string(skipped) + " paths left the chart";
  });
  run.check("degenerate_preimages_are_null_sections", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 200; ++i) {
      const Vector center = rng.uniform_vector(n, -2.0, 2.0);
      const Vector v = boundary_to_projective(sig, FiniteBoundary{center}).coords();
      // On |x - x0|^2 - |y - y0|^2 + z^2 = 0 the horizontal offset is timelike.
      if (!has_timelike(sig)) break;
      Vector off = rng.uniform_vector(n, -2.0, 2.0);
      const double h = horizontal_form(sig, off);
      if (h > -1e-2) continue;
      const HalfSpacePoint p(sig, Vector(center + off), std::sqrt(-h));
      const Vector x = embed_coords(p);
      t.add(inner_product(sig.ambient(), x, v) / (x.norm() * v.norm()));
    }
    if (has_hyperplane_stratum(sig)) {
      for (int i = 0; i < 200; ++i) {
        const auto bp = random_boundary_point(sig, rng, Stratum::Hyperplane);
        const auto& hp = std::get<VerticalHyperplane>(bp);
        Vector w = rng.uniform_vector(n, -2.0, 2.0);
        const Vector jn = form_diagonal(sig.horizontal()).asDiagonal() * hp.normal;
        w -= (w.dot(jn) - hp.offset) / jn.squaredNorm() * jn;
        const HalfSpacePoint p(sig, w, rng.uniform(0.25, 3.0));
        const Vector v = boundary_to_projective(sig, bp).coords();
        const Vector x = embed_coords(p);
        t.add(inner_product(sig.ambient(), x, v) / (x.norm() * v.norm()));
      }
    }
  });
  run.check("vertical_signature_count", 0.0, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 200; ++i) {
      const HalfSpacePoint p = random_point(sig, rng);
      Vector normal = rng.normal_vector(n);
      if (i % 2 == 0 && has_hyperplane_stratum(sig)) normal = random_null_direction(sig, rng);
      if (n == 0 || normal.norm() < 1e-6) continue;
      const auto h = hypersurface_through(p, Tangent{normal, 0.0});
      const auto s = signature_of(sig, h);
      t.require(s.positive + s.negative + s.null_rank == sig.dim() - 1);
      t.require(s.degenerate == (std::abs(horizontal_form(sig, normal)) <=
                                 kGramDeadBand * normal.squaredNorm()));
    }
  });
  run.check("lightcone_contains_apex", 0.0, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 50; ++i) {
      const Lightcone cone{random_point(sig, rng)};
      t.require(cone.contains(cone.apex, 1e-12));
    }
  });
}

// --- boundary ---------------------------------------------------------------

std::vector<Vector> tail_sequence(const Signature& sig, int from, int count,
                                  const std::function<std::pair<double, double>(int)>& f) {
  std::vector<Vector> out;
  for (int k = from; k < from + count; ++k) {
    Vector w = Vector::Zero(sig.horizontal_dim());
    const auto [a, b] = f(k);
    w(0) = a;
    w(sig.nx()) = b;
    out.push_back(w);
  }
  return out;
}

void boundary_suite(Runner& run) {
  const Signature& sig = run.sig();
  const int n = sig.horizontal_dim();
  const bool mixed = sig.nx() >= 1 && sig.ny() >= 1;

  if (mixed) {
    Vector normal = Vector::Zero(n);
    normal(0) = 1.0;
    normal(sig.nx()) = 1.0;
    const BoundaryPoint expected = VerticalHyperplane{normal, 2.0};
    run.check("limit_hyperplane", 0.0, [&](Tally& t, Rng&) {
      const auto s = tail_sequence(sig, 100, 8, [](int k) { return std::pair(k + 2.0, 1.0 * k); });
      t.require(same_boundary_point(sig, boundary_limit(sig, s), expected, 1e-6));
    });
    run.check("limit_reindexing", 0.0, [&](Tally& t, Rng&) {
      for (int from : {100, 250, 1000}) {
        const auto s =
            tail_sequence(sig, from, 8, [](int k) { return std::pair(k + 2.0, 1.0 * k); });
        t.require(same_boundary_point(sig, boundary_limit(sig, s), expected, 1e-6));
      }
    });
    run.check("limit_infinity", 0.0, [&](Tally& t, Rng&) {
      const auto s =
          tail_sequence(sig, 100, 8, [](int k) { return std::pair(1.0 * k * k, 1.0 * k); });
      t.require(is_infinity(boundary_limit(sig, s)));
    });
  } else {
    run.skip("limit_hyperplane", "needs p >= 2 and q >= 1");
    run.skip("limit_reindexing", "needs p >= 2 and q >= 1");
    run.skip("limit_infinity", "needs p >= 2 and q >= 1");
  }
  run.check("limit_finite", 0.0, [&](Tally& t, Rng& rng) {
    const Vector w = rng.uniform_vector(n, -2.0, 2.0);
    const std::vector<Vector> s(8, w);
    const auto bp = boundary_limit(sig, s);
    t.require(same_boundary_point(sig, bp, FiniteBoundary{w}, 1e-9));
  });

  if (sig == Signature(2, 1)) {
    run.check("hausdorff_monotone_to_plane", 1e-2, [&](Tally& t, Rng&) {
      const SampleWindow window{3.0, 64, 4};
      const VerticalHypersurface plane{make_affine_subspace(
          (Vector(2) << 1.0, -1.0).finished(), (Matrix(2, 1) << 1.0, 1.0).finished())};
      const auto target = implicit_function(sig, TotallyGeodesicHypersurface(plane));
      double previous = kInf;
      for (int k : {4, 8, 16, 32}) {
        const QuadricHypersurface q{(Vector(2) << k + 2.0, 1.0 * k).finished(), 0.0};
        const double dist =
            sampled_hausdorff(3, implicit_function(sig, TotallyGeodesicHypersurface(q)), target,
                              window);
        t.add(std::max(0.0, dist - previous));
        previous = dist;
      }
      t.note = "last distance " + std::to_string(previous);
    });
    run.check("hyperplane_stratum_two_lines", 0.0, [&](Tally& t, Rng&) {
      const auto dirs = hyperplane_stratum_directions(sig);
      t.require(dirs.size() == 2);
      for (const auto& d : dirs) t.require(std::abs(horizontal_form(sig, d)) < 1e-12);
      t.require(std::abs(sine_between(dirs[0], dirs[1])) > 0.5);
    });
  } else {
    run.skip("hausdorff_monotone_to_plane", "uses the (2, 1) cone sequence");
    run.skip("hyperplane_stratum_two_lines", "stated for (2, 1)");
  }

  if (sig.dim() >= 2 && has_timelike(sig)) {
    run.check("hausdorff_self_zero", 0.0, [&](Tally& t, Rng&) {
      const Lightcone cone{HalfSpacePoint(sig, Vector::Zero(n), 1.0)};
      const PointSet s = cone.sample(SampleWindow{2.0, sig.dim() <= 3 ? 16 : 6, 2});
      t.add(sampled_hausdorff(s, s));
    });
  }

  run.check("hausdorff_backends_agree", 0.0, [&](Tally& t, Rng& rng) {
    for (int trial = 0; trial < 10; ++trial) {
      PointSet a(sig.dim());
      PointSet b(sig.dim());
      for (int i = 0; i < 37 + trial; ++i) a.push_back(rng.uniform_vector(sig.dim(), -1, 1));
      for (int i = 0; i < 23 + 3 * trial; ++i) b.push_back(rng.uniform_vector(sig.dim(), -1, 1));
      const double ref = sampled_hausdorff(a, b, kernels::Backend::Scalar);
      t.add(sampled_hausdorff(a, b, kernels::active_backend()) - ref);
    }
  });
}

// --- horospheres ------------------------------------------------------------

std::vector<Stratum> horosphere_strata(const Signature& sig) {
  std::vector<Stratum> out{Stratum::Infinity, Stratum::Finite};
  if (has_hyperplane_stratum(sig)) out.push_back(Stratum::Hyperplane);
  return out;
}

const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::Finite:
      return "piecewise";
    case Stratum::Hyperplane:
      return "wedge";
    case Stratum::Infinity:
      return "plane";
  }
  return "?";
}

/// A point on the horosphere, or nothing if the drawn horizontal position
/// has no height on it.
std::optional<HalfSpacePoint> point_on(const Signature& sig, const Horosphere& h, Rng& rng) {
  const Vector w = rng.uniform_vector(sig.horizontal_dim(), -2.0, 2.0);
  double z = 0.0;
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    z = pl->c;
  } else if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    z = wd->c * std::abs(horizontal_product(sig, w, wd->normal) + wd->d);
  } else {
    const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
    const double f = horizontal_form(sig, Vector(w - pq.center));
    const double c = pq.c;
    // z^2 - 2 c z + f = 0 or z^2 + 2 c z + f = 0.
    std::vector<double> roots;
    if (c * c - f >= 0.0) {
      roots.push_back(c + std::sqrt(c * c - f));
      roots.push_back(c - std::sqrt(c * c - f));
      roots.push_back(-c + std::sqrt(c * c - f));
    }
    std::erase_if(roots, [](double r) { return r <= 1e-3; });
    if (roots.empty()) return std::nullopt;
    z = roots[rng.integer(0, static_cast<int>(roots.size()) - 1)];
  }
  if (!(z > 1e-3)) return std::nullopt;
  return HalfSpacePoint(sig, w, z);
}

void horospheres_suite(Runner& run) {
  const Signature& sig = run.sig();
  for (Stratum stratum : horosphere_strata(sig)) {
    const std::string tag = stratum_name(stratum);
    run.check(std::string("oracle_agreement_") + tag, 0.0, [&](Tally& t, Rng& rng) {
      for (int i = 0; i < 500; ++i) {
        const auto h = horosphere_from(sig, random_boundary_point(sig, rng, stratum),
                                       rng.uniform(0.5, 2.0));
        const LevelSetOracle oracle = level_set_for(sig, h);
        std::optional<HalfSpacePoint> p;
        if (i % 2 == 0) p = point_on(sig, h, rng);
        if (!p) p = random_point(sig, rng);
        t.require(horosphere_contains(sig, h, *p, 1e-8) == oracle.contains(*p, 1e-8));
      }
    });
    run.check(std::string("orthogonality_") + tag, 1e-7, [&](Tally& t, Rng& rng) {
      const auto h = horosphere_from(sig, random_boundary_point(sig, rng, stratum), 1.0);
      const auto report = orthogonality_residual(sig, h, 50, rng.integer(0, 1 << 30));
      t.add(report.max_residual);
      t.cases = report.tested;
      t.note = std::to_string(report.skipped) + " skipped";
    });
  }
  run.check("piecewise_branch_membership", 1e-8, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 500; ++i) {
      const auto bp = random_boundary_point(sig, rng, Stratum::Finite);
      const auto h = horosphere_from(sig, bp, rng.uniform(0.5, 2.0));
      const auto p = point_on(sig, h, rng);
      if (!p) continue;
      const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
      const double f = horizontal_form(sig, Vector(p->horizontal() - pq.center));
      const double plus = f + (p->z() + pq.c) * (p->z() + pq.c) - pq.c * pq.c;
      const double minus = f + (p->z() - pq.c) * (p->z() - pq.c) - pq.c * pq.c;
      t.add(std::min(std::abs(plus), std::abs(minus)));
    }
  });
  run.check("family_preserved_by_G", 1e-8, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 200; ++i) {
      const Stratum stratum = i % 2 == 0 ? Stratum::Finite : Stratum::Infinity;
      const auto bp = random_boundary_point(sig, rng, stratum);
      const double c = rng.uniform(0.5, 2.0);
      const auto h = horosphere_from(sig, bp, c);
      const auto p = point_on(sig, h, rng);
      if (!p) continue;
      const IsometryG g = random_isometry(sig, rng);
      const auto image = horosphere_from(sig, g_boundary_apply(sig, g, bp), g.lambda * c);
      const HalfSpacePoint q = g_apply(g, *p);
      t.add(horosphere_residual(sig, image, q.coords()) / (1.0 + q.coords().squaredNorm()));
    }
  });
}

// --- isometries -------------------------------------------------------------

IsometryWord random_word(const Signature& sig, Rng& rng, int length) {
  IsometryWord w;
  for (int i = 0; i < length; ++i) {
    if (rng.coin()) {
      w.letters.push_back(InversionJ{});
    } else {
      w.letters.push_back(random_isometry(sig, rng));
    }
  }
  return w;
}

void isometries_suite(Runner& run) {
  const Signature& sig = run.sig();
  const int n = sig.horizontal_dim();

  run.check("compose_matches_sequential", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      const int len = rng.integer(1, 6);
      std::vector<IsometryG> gs;
      for (int k = 0; k < len; ++k) gs.push_back(random_isometry(sig, rng));
      IsometryG total = identity_isometry(sig);
      for (const auto& g : gs) total = g_compose(total, g);
      const HalfSpacePoint p = random_point(sig, rng);
      HalfSpacePoint q = p;
      for (auto it = gs.rbegin(); it != gs.rend(); ++it) q = g_apply(*it, q);
      const Vector a = g_apply(total, p).coords();
      t.add((a - q.coords()).cwiseAbs().maxCoeff() / (1.0 + q.coords().norm()));
    }
  });
  run.check("inverse_identity", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      const IsometryG g = random_isometry(sig, rng);
      const IsometryG e = g_compose(g, g_inverse(sig, g));
      for (int k = 0; k < 10; ++k) {
        const HalfSpacePoint p = random_point(sig, rng);
        t.add((g_apply(e, p).coords() - p.coords()).cwiseAbs().maxCoeff());
      }
    }
  });
  run.check("g_pullback", 1e-9, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      const IsometryG g = random_isometry(sig, rng);
      const HalfSpacePoint p = random_point(sig, rng);
      const Tangent v = random_tangent(sig, rng);
      const Tangent w = random_tangent(sig, rng);
      const double before = metric_value(p, v, w);
      const double after = metric_value(g_apply(g, p), g_push(g, v), g_push(g, w));
      t.add((after - before) / (1.0 + std::abs(before)));
    }
  });
  run.check("stabilizer_of_base_point", 0.0, [&](Tally& t, Rng& rng) {
    const HalfSpacePoint base(sig, Vector::Zero(n), 1.0);
    for (int i = 0; i < 100; ++i) {
      IsometryG g = random_isometry(sig, rng);
      if (i % 2 == 0) {
        g.lambda = 1.0;
        g.t.setZero();
      }
      const bool fixes = (g_apply(g, base).coords() - base.coords()).norm() < 1e-12;
      t.require(fixes == (g.lambda == 1.0 && g.t.isZero()));
    }
  });

  auto off_cone = [&](Rng& rng) {
    for (;;) {
      const HalfSpacePoint p = random_point(sig, rng);
      const double s = horizontal_form(sig, p.horizontal()) + p.z() * p.z();
      if (std::abs(s) > 1e-2 * (1.0 + p.coords().squaredNorm())) return p;
    }
  };
  run.check("inversion_involution", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = off_cone(rng);
      const Vector back = inversion_apply(inversion_apply(p)).coords();
      t.add((back - p.coords()).cwiseAbs().maxCoeff() / (1.0 + p.coords().norm()));
    }
  });
  run.check("mu_product", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = off_cone(rng);
      t.add(mu(inversion_apply(p)) * mu(p) - 1.0);
    }
  });
  run.check("inversion_conjugates_reflection", 1e-10, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 1000; ++i) {
      const HalfSpacePoint p = off_cone(rng);
      Vector x = embed_coords(p);
      x(sig.index_p()) = -x(sig.index_p());
      const double sign = mu(p) > 0.0 ? 1.0 : -1.0;
      const Vector y = embed_coords(inversion_apply(p));
      t.add((y - sign * x).cwiseAbs().maxCoeff() / (1.0 + x.cwiseAbs().maxCoeff()));
    }
  });
  run.check("inversion_boundary_dual_route", 0.0, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 300; ++i) {
      const auto stratum = static_cast<Stratum>(i % 3);
      if (stratum == Stratum::Hyperplane && !has_hyperplane_stratum(sig)) continue;
      auto bp = random_boundary_point(sig, rng, stratum);
      if (i % 7 == 0) bp = FiniteBoundary{Vector::Zero(n)};
      if (i % 11 == 0 && has_hyperplane_stratum(sig)) {
        bp = FiniteBoundary{random_null_direction(sig, rng) * rng.uniform(0.5, 2.0)};
      }
      if (i % 13 == 0 && has_hyperplane_stratum(sig)) {
        bp = VerticalHyperplane{random_null_direction(sig, rng), 0.0};
      }
      const auto a = inversion_boundary_apply(sig, bp);
      t.require(same_boundary_point(sig, a, inversion_boundary_projective(sig, bp), 1e-9));
      t.require(same_boundary_point(sig, inversion_boundary_apply(sig, a), bp, 1e-9));
    }
  });
  run.check("projective_action_commutes", 1e-9, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 30; ++i) {
      const IsometryLetter letter = i % 5 == 0 ? IsometryLetter(InversionJ{})
                                               : IsometryLetter(random_isometry(sig, rng));
      const Matrix m = g_to_projective_action(sig, letter);
      t.require(is_indefinite_orthogonal(sig.ambient(), m, 1e-9));
      for (int k = 0; k < 10; ++k) {
        const HalfSpacePoint p = off_cone(rng);
        const Vector mx = m * embed_coords(p);
        const HalfSpacePoint q = std::holds_alternative<InversionJ>(letter)
                                     ? inversion_apply(p)
                                     : g_apply(std::get<IsometryG>(letter), p);
        const ProjectivePoint a(sig, mx);
        const ProjectivePoint b(sig, embed_coords(q));
        t.add((a.coords() - b.coords()).cwiseAbs().maxCoeff());
      }
    }
  });
  run.check("word_boundary_equivariance", 1e-8, [&](Tally& t, Rng& rng) {
    for (int i = 0; i < 100; ++i) {
      const IsometryWord w = random_word(sig, rng, rng.integer(1, 6));
      const auto bp = random_boundary_point(sig, rng, Stratum::Finite);
      const auto image = word_boundary_apply(sig, w, bp);
      Vector v = boundary_to_projective(sig, bp).coords();
      for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        v = g_to_projective_action(sig, *it) * v;
      }
      t.require(approx_equal(ProjectivePoint(sig, v), boundary_to_projective(sig, image), 1e-8));
    }
  });
  run.check("transitivity_words", 1e-8, [&](Tally& t, Rng& rng) {
    const BoundaryPoint origin = FiniteBoundary{Vector::Zero(n)};
    for (int i = 0; i < 100; ++i) {
      auto stratum = static_cast<Stratum>(i % 3);
      if (stratum == Stratum::Hyperplane && !has_hyperplane_stratum(sig)) {
        stratum = Stratum::Finite;
      }
      auto target = random_boundary_point(sig, rng, stratum);
      if (stratum == Stratum::Hyperplane && i % 4 == 2) {
        std::get<VerticalHyperplane>(target).offset = 0.0;
      }
      const auto w = transitivity_word(sig, target);
      t.require(same_boundary_point(sig, word_boundary_apply(sig, w, origin), target, 1e-8));
    }
  });
  if (has_timelike(sig) && sig.nx() >= 1) {
    run.check("lightlike_completeness_preserved", 0.0, [&](Tally& t, Rng& rng) {
      for (int i = 0; i < 200; ++i) {
        const HalfSpacePoint p = random_point(sig, rng);
        const Vector u = random_null_direction(sig, rng);
        Tangent v{u, 0.0};
        if (i % 2 == 1) {
          // (u, w) with h(u) = -w^2.
          const Vector e = rng.unit_vector(sig.ny());
          Vector h = Vector::Zero(n);
          h.head(sig.nx()) = rng.unit_vector(sig.nx()) * rng.uniform(0.0, 0.9);
          h.tail(sig.ny()) = e;
          v = Tangent{h, std::sqrt(-horizontal_form(sig, h)) * (rng.coin() ? 1.0 : -1.0)};
        }
        const auto before = classify_geodesic(p, v);
        const IsometryG g = random_isometry(sig, rng);
        const auto after = classify_geodesic(g_apply(g, p), g_push(g, v));
        t.require(before.variant == after.variant);
        t.require(before.complete == after.complete ||
                  (before.complete[0] == after.complete[1] &&
                   before.complete[1] == after.complete[0]));
      }
    });
  } else {
    run.skip("lightlike_completeness_preserved", "no lightlike directions");
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const Signature& sig, std::uint64_t seed) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw InvalidParameterError("unknown suite '" + suite + "'");
  }
  VerifyReport report;
  report.suite = suite;
  report.sig = sig;
  report.seed = seed;
  Runner run(sig, seed, report.checks);
  const bool all = suite == "all";
  if (all || suite == "embedding") embedding_suite(run);
  if (all || suite == "geodesics") geodesics_suite(run);
  if (all || suite == "submanifolds") submanifolds_suite(run);
  if (all || suite == "boundary") boundary_suite(run);
  if (all || suite == "horospheres") horospheres_suite(run);
  if (all || suite == "isometries") isometries_suite(run);
  return report;
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name}};
  if (c.skipped) {
    j["status"] = "skipped";
  } else {
    j["status"] = c.passed ? "pass" : "fail";
    j["max_residual"] = std::isfinite(c.max_residual) ? Json(c.max_residual) : Json(nullptr);
    j["tolerance"] = c.tolerance;
    j["cases"] = c.cases;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  int failed = 0;
  int skipped = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    if (c.skipped) {
      ++skipped;
    } else if (!c.passed) {
      ++failed;
    }
  }
  return Json{{"schema_version", kSchemaVersion},
              {"suite", r.suite},
              {"signature", to_json(r.sig)},
              {"seed", r.seed},
              {"passed", r.passed()},
              {"summary",
               {{"checks", r.checks.size()}, {"failed", failed}, {"skipped", skipped}}},
              {"checks", checks}};
}

}  // namespace hpq
