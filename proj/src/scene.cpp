#include "hpq/scene.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "hpq/boundary.hpp"
#include "hpq/errors.hpp"

namespace hpq {

SceneFormat scene_format_from_string(const std::string& s) {
  if (s == "csv") return SceneFormat::Csv;
  if (s == "json") return SceneFormat::Json;
  if (s == "obj") return SceneFormat::Obj;
  throw InvalidParameterError("unknown format '" + s + "' (csv, json, obj)");
}

namespace {

using Height = std::function<std::optional<double>(const Vector&)>;

/// Grid over (a, b) in [lo_a, hi_a] x [lo_b, hi_b]; `lift` returns the vertex or nothing.
void add_grid(Mesh& mesh, int grid, double lo_a, double hi_a, double lo_b, double hi_b,
              const std::function<std::optional<Vector>(double, double)>& lift) {
  std::vector<int> index(static_cast<std::size_t>(grid) * grid, -1);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double a = lo_a + (hi_a - lo_a) * i / (grid - 1);
      const double b = lo_b + (hi_b - lo_b) * j / (grid - 1);
      if (auto v = lift(a, b)) {
        index[i * grid + j] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(*v);
      }
    }
  }
  for (int i = 0; i + 1 < grid; ++i) {
    for (int j = 0; j + 1 < grid; ++j) {
      const int v00 = index[i * grid + j];
      const int v10 = index[(i + 1) * grid + j];
      const int v01 = index[i * grid + j + 1];
      const int v11 = index[(i + 1) * grid + j + 1];
      if (v00 >= 0 && v10 >= 0 && v11 >= 0) mesh.faces.push_back({v00, v10, v11});
      if (v00 >= 0 && v11 >= 0 && v01 >= 0) mesh.faces.push_back({v00, v11, v01});
    }
  }
}

void add_heightfield(Mesh& mesh, const Scene& scene, const Height& height) {
  const double r = scene.R;
  add_grid(mesh, scene.grid, -r, r, -r, r, [&](double a, double b) -> std::optional<Vector> {
    const Vector w = (Vector(2) << a, b).finished();
    const auto z = height(w);
    if (!z || !std::isfinite(*z) || !(*z > 0.0) || *z > r) return std::nullopt;
    return (Vector(3) << a, b, *z).finished();
  });
}

double residual_of(const Signature& sig, const SceneObject& object, const Vector& x) {
  if (const auto* h = std::get_if<TotallyGeodesicHypersurface>(&object)) {
    return hypersurface_residual(sig, *h, x);
  }
  if (const auto* h = std::get_if<Horosphere>(&object)) return horosphere_residual(sig, *h, x);
  if (const auto* l = std::get_if<Lightcone>(&object)) return l->residual(x);
  return 0.0;
}

std::optional<double> root(double v) {
  if (v < 0.0) return std::nullopt;
  return std::sqrt(v);
}

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::pair<double, double> affine_window(const GeodesicDescriptor& d, double r) {
  switch (d.variant) {
    case GeodesicVariant::VerticalLine:
      return {std::log(1e-3 * r), std::log(r)};
    case GeodesicVariant::Ellipse:
      return {-8.0, 8.0};
    case GeodesicVariant::SpacelikeHyperbola:
      return {1e-3, 8.0};
    case GeodesicVariant::TimelikeHyperbola:
      return {-std::numbers::pi / 2.0 + 1e-3, std::numbers::pi / 2.0 - 1e-3};
    case GeodesicVariant::Parabola:
      return {std::log(1e-3), std::log(r)};
    case GeodesicVariant::LightlikeSlantLine:
      return {d.slope / r, 20.0 * d.slope / r};
    case GeodesicVariant::LightlikeHorizontalLine:
      return {-2.0 * r, 2.0 * r};
  }
  return {0.0, 1.0};
}

bool inside(const Vector& x, double r) {
  const Eigen::Index n = x.size() - 1;
  return (n == 0 || x.head(n).cwiseAbs().maxCoeff() <= r) && x(n) > 0.0 && x(n) <= r;
}

}  // namespace

Mesh surface_mesh(const Scene& scene, const SceneObject& object) {
  const Signature& sig = scene.sig;
  if (sig.dim() != 3) throw InvalidParameterError("surface meshes need p + q = 3");
  Mesh mesh;
  if (const auto* h = std::get_if<TotallyGeodesicHypersurface>(&object)) {
    if (const auto* q = std::get_if<QuadricHypersurface>(h)) {
      add_heightfield(mesh, scene, [&](const Vector& w) {
        return root(q->c - horizontal_form(sig, Vector(w - q->center)));
      });
    } else {
      const auto& plane = std::get<VerticalHypersurface>(*h).plane;
      const Vector e = plane.basis.col(0);
      const double r = scene.R;
      const double span = 2.0 * std::sqrt(2.0) * r + plane.basepoint.norm();
      add_grid(mesh, scene.grid, -span, span, r / (scene.grid - 1), r,
               [&](double s, double z) -> std::optional<Vector> {
                 const Vector w = plane.basepoint + s * e;
                 if (w.cwiseAbs().maxCoeff() > r) return std::nullopt;
                 return (Vector(3) << w, z).finished();
               });
    }
  } else if (const auto* l = std::get_if<Lightcone>(&object)) {
    for (double sign : {1.0, -1.0}) {
      add_heightfield(mesh, scene, [&](const Vector& w) -> std::optional<double> {
        const auto s = root(-horizontal_form(sig, Vector(w - l->apex.horizontal())));
        if (!s) return std::nullopt;
        return l->apex.z() + sign * *s;
      });
    }
  } else if (const auto* hs = std::get_if<Horosphere>(&object)) {
    if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&hs->shape)) {
      add_heightfield(mesh, scene, [c = pl->c](const Vector&) { return c; });
    } else if (const auto* wd = std::get_if<WedgeHorosphere>(&hs->shape)) {
      add_heightfield(mesh, scene, [&](const Vector& w) -> std::optional<double> {
        return wd->c * std::abs(horizontal_product(sig, w, wd->normal) + wd->d);
      });
    } else {
      const auto& pq = std::get<PiecewiseQuadricHorosphere>(hs->shape);
      const double c = pq.c;
      auto f0 = [&](const Vector& w) { return horizontal_form(sig, Vector(w - pq.center)); };
      for (int sheet = 0; sheet < 3; ++sheet) {
        add_heightfield(mesh, scene, [&, sheet](const Vector& w) -> std::optional<double> {
          const auto s = root(c * c - f0(w));
          if (!s) return std::nullopt;
          if (sheet == 0) return c + *s;
          if (sheet == 1) return c - *s;
          return -c + *s;
        });
      }
    }
  } else {
    throw InvalidParameterError("surface_mesh: curves have no mesh");
  }
  return mesh;
}

std::vector<std::pair<double, Vector>> curve_samples(const Scene& scene,
                                                     const GeodesicDescriptor& d,
                                                     double& step) {
  const auto [lo, hi] = affine_window(d, scene.R);
  const int count = 20001;
  step = (hi - lo) / (count - 1);
  std::vector<std::pair<double, Vector>> best;
  std::vector<std::pair<double, Vector>> run;
  for (int i = 0; i < count; ++i) {
    const double t = lo + step * i;
    const Vector x = evaluate_affine(d, t).coords();
    if (inside(x, scene.R)) {
      run.emplace_back(t, x);
    } else {
      if (run.size() > best.size()) best = run;
      run.clear();
    }
  }
  if (run.size() > best.size()) best = run;
  return best;
}

std::vector<ExportedFile> export_scene(const Scene& scene, const std::filesystem::path& dir) {
  if (scene.grid < 2) throw InvalidParameterError("scene grid must be at least 2");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
  const Signature& sig = scene.sig;
  std::vector<ExportedFile> out;

  auto open = [](const std::filesystem::path& p) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    return f;
  };

  for (const auto& named : scene.objects) {
    ExportedFile file;
    file.object = named.name;
    if (const auto* d = std::get_if<GeodesicDescriptor>(&named.object)) {
      double step = 0.0;
      const auto pts = curve_samples(scene, *d, step);
      std::vector<Vector> pos;
      for (const auto& [t, x] : pts) pos.push_back(x);
      file.vertices = pts.size();
      file.max_residual = pos.size() >= 3 ? geodesic_residual(sig, pos, step) : 0.0;
      if (scene.format == SceneFormat::Json) {
        const auto path = dir / (named.name + ".json");
        Json j{{"name", named.name}, {"descriptor", to_json(*d)}, {"step", step}};
        Json arr = Json::array();
        for (const auto& [t, x] : pts) arr.push_back(Json{{"t", t}, {"point", to_json(x)}});
        j["samples"] = arr;
        open(path) << j.dump(2) << "\n";
        file.path = path.string();
      } else {
        const auto path = dir / (named.name + ".csv");
        auto f = open(path);
        f << "t";
        for (int i = 0; i < sig.nx(); ++i) f << ",x" << i + 1;
        for (int i = 0; i < sig.ny(); ++i) f << ",y" << i + 1;
        f << ",z\n";
        for (const auto& [t, x] : pts) {
          f << number(t);
          for (Eigen::Index k = 0; k < x.size(); ++k) f << "," << number(x(k));
          f << "\n";
        }
        file.path = path.string();
      }
      out.push_back(file);
      continue;
    }

    const Mesh mesh = surface_mesh(scene, named.object);
    file.vertices = mesh.vertices.size();
    file.faces = mesh.faces.size();
    for (const auto& v : mesh.vertices) {
      file.max_residual = std::max(file.max_residual, std::abs(residual_of(sig, named.object, v)));
    }
    if (scene.format == SceneFormat::Obj) {
      const auto path = dir / (named.name + ".obj");
      auto f = open(path);
      for (const auto& v : mesh.vertices) {
        f << "v " << number(v(0)) << " " << number(v(1)) << " " << number(v(2)) << "\n";
      }
      for (const auto& t : mesh.faces) {
        f << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
      }
      file.path = path.string();
    } else if (scene.format == SceneFormat::Csv) {
      const auto path = dir / (named.name + ".csv");
      auto f = open(path);
      f << (sig.nx() == 2 ? "x1,x2,z\n" : sig.nx() == 1 ? "x1,y1,z\n" : "y1,y2,z\n");
      for (const auto& v : mesh.vertices) {
        f << number(v(0)) << "," << number(v(1)) << "," << number(v(2)) << "\n";
      }
      file.path = path.string();
    } else {
      const auto path = dir / (named.name + ".json");
      Json verts = Json::array();
      for (const auto& v : mesh.vertices) verts.push_back(to_json(v));
      Json faces = Json::array();
      for (const auto& t : mesh.faces) faces.push_back(Json::array({t[0], t[1], t[2]}));
      open(path) << Json{{"name", named.name}, {"vertices", verts}, {"faces", faces}}.dump() << "\n";
      file.path = path.string();
    }
    out.push_back(file);
  }
  return out;
}

Scene quadrics_scene(const Signature& sig) {
  Scene scene{sig, {}};
  const Vector center = Vector::Zero(sig.horizontal_dim());
  scene.objects.push_back({"quadric_c_minus1", QuadricHypersurface{center, -1.0}});
  scene.objects.push_back({"quadric_c_0", QuadricHypersurface{center, 0.0}});
  scene.objects.push_back({"quadric_c_1", QuadricHypersurface{center, 1.0}});
  return scene;
}

Scene lightcone_scene(const Signature& sig) {
  Scene scene{sig, {}};
  scene.objects.push_back(
      {"lightcone", Lightcone{HalfSpacePoint(sig, Vector::Zero(sig.horizontal_dim()), 1.0)}});
  return scene;
}

Scene geodesics_scene(const Signature& sig) {
  Scene scene{sig, {}};
  scene.format = SceneFormat::Csv;
  const int n = sig.horizontal_dim();
  const HalfSpacePoint p(sig, Vector::Zero(n), 1.0);
  Vector ex = Vector::Zero(n);
  Vector ey = Vector::Zero(n);
  if (sig.nx() > 0) ex(0) = 1.0;
  if (sig.ny() > 0) ey(sig.nx()) = 1.0;
  auto add = [&](const std::string& name, const Vector& h, double w) {
    scene.objects.push_back({name, classify_geodesic(p, Tangent{h, w})});
  };
  add("vertical", Vector::Zero(n), 1.0);
  if (sig.nx() > 0) add("ellipse", ex, 0.5);
  if (sig.ny() > 0) {
    add("timelike_hyperbola", ey, 0.0);
    add("spacelike_hyperbola", Vector(0.3 * ex + ey), 1.5);
  }
  if (sig.nx() > 0 && sig.ny() > 0) add("parabola", Vector(ex + ey), 1.0);
  return scene;
}

Scene horospheres_scene(const Signature& sig) {
  Scene scene{sig, {}};
  const int n = sig.horizontal_dim();
  scene.objects.push_back({"horosphere_infinity", horosphere_from(sig, InfinityPoint{}, 1.0)});
  if (sig.nx() > 0 && sig.ny() > 0) {
    Vector normal = Vector::Zero(n);
    normal(0) = 1.0;
    normal(sig.nx()) = 1.0;
    scene.objects.push_back(
        {"horosphere_hyperplane", horosphere_from(sig, VerticalHyperplane{normal, 0.0}, 1.0)});
  }
  scene.objects.push_back(
      {"horosphere_finite", horosphere_from(sig, FiniteBoundary{Vector::Zero(n)}, 1.0)});
  return scene;
}

Json strata_identification(int intercepts) {
  if (intercepts < 1) throw InvalidParameterError("strata_identification: intercepts >= 1");
  const Signature sig(2, 1);
  auto squash = [](double v) { return 2.0 / std::numbers::pi * std::atan(v); };
  auto diamond = [](double a, double b) { return Json::array({(a + b) / 2.0, (b - a) / 2.0}); };

  Json families = Json::array();
  const char* labels[] = {"x - y = d", "x + y = d"};
  int k = 0;
  for (const Vector& normal : hyperplane_stratum_directions(sig)) {
    Json members = Json::array();
    for (int i = 0; i < intercepts; ++i) {
      const double d = intercepts == 1 ? 0.0 : -3.0 + 6.0 * i / (intercepts - 1);
      const double fixed = squash(d);
      Json sides = k == 0 ? Json::array({diamond(fixed, 1.0), diamond(fixed, -1.0)})
                          : Json::array({diamond(1.0, fixed), diamond(-1.0, fixed)});
      members.push_back(Json{{"offset", d},
                             {"boundary_point", to_json(BoundaryPoint(VerticalHyperplane{normal, d}))},
                             {"identified_side_points", sides}});
    }
    families.push_back(Json{{"normal", to_json(normal)}, {"label", labels[k]}, {"members", members}});
    ++k;
  }
  return Json{{"schema_version", kSchemaVersion},
              {"signature", to_json(sig)},
              {"chart",
               "(X, Y) = ((A + B) / 2, (B - A) / 2), A = (2/pi) atan(x - y), B = (2/pi) atan(x + y)"},
              {"hyperplane_families", families},
              {"infinity", Json{{"boundary_point", to_json(BoundaryPoint(InfinityPoint{}))},
                                {"diamond_vertices", Json::array({diamond(1, 1), diamond(-1, 1),
                                                                  diamond(-1, -1), diamond(1, -1)})}}}};
}

}  // namespace hpq
