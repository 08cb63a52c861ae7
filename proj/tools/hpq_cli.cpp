#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "hpq/boundary.hpp"
#include "hpq/errors.hpp"
#include "hpq/geodesics.hpp"
#include "hpq/horospheres.hpp"
#include "hpq/isometries.hpp"
#include "hpq/metric.hpp"
#include "hpq/models.hpp"
#include "hpq/scene.hpp"
#include "hpq/serialize.hpp"
#include "hpq/submanifolds.hpp"
#include "hpq/verify.hpp"

namespace {

using hpq::Json;

constexpr int kUsageError = 2;

/// `text` if given, else standard input.
Json read_json(const std::string& text) {
  if (!text.empty()) return Json::parse(text);
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return Json::parse(all);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json files_json(const std::vector<hpq::ExportedFile>& files) {
  Json out = Json::array();
  for (const auto& f : files) {
    out.push_back(Json{{"object", f.object},
                       {"path", f.path},
                       {"vertices", f.vertices},
                       {"faces", f.faces},
                       {"max_residual", f.max_residual}});
  }
  return out;
}

Json endpoints_json(const hpq::GeodesicDescriptor& d) {
  const auto [lo, hi] = hpq::endpoints(d);
  return Json::array({lo ? hpq::to_json(*lo) : Json(nullptr), hi ? hpq::to_json(*hi) : Json(nullptr)});
}

struct SceneOptions {
  std::string format;
  double R = 3.0;
  int grid = 64;
};

void add_scene_options(CLI::App* cmd, SceneOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "csv, json or obj")
      ->check(CLI::IsMember({"csv", "json", "obj"}))
      ->capture_default_str();
  cmd->add_option("--R", o.R, "window half-width")->capture_default_str();
  cmd->add_option("--grid", o.grid, "grid nodes per axis")
      ->check(CLI::Range(2, 4096))
      ->capture_default_str();
}

Json run_scene(hpq::Scene scene, const SceneOptions& o, const std::string& out) {
  scene.format = hpq::scene_format_from_string(o.format);
  scene.R = o.R;
  scene.grid = o.grid;
  return Json{{"schema_version", hpq::kSchemaVersion},
              {"signature", hpq::to_json(scene.sig)},
              {"files", files_json(hpq::export_scene(scene, out))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-space model of pseudo-hyperbolic space H^{p,q}"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string sig_text = "2,1";
  std::string out_dir = "./out";
  app.add_option("--sig", sig_text, "signature p,q")->capture_default_str();
  app.add_option("--out", out_dir, "output directory for exported files")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a property verification suite");
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::string report_path;
  verify->add_option("--suite", suite, "embedding, geodesics, submanifolds, boundary, horospheres, isometries or all")
      ->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--report", report_path, "also write the JSON report here");

  // classify
  auto* classify = app.add_subcommand(
      "classify", "read {\"point\": {x, y, z}, \"tangent\": {u, v, w}} and print the geodesic");
  std::string classify_input;
  classify->add_option("--input", classify_input, "JSON text instead of standard input");

  // geodesic
  auto* geodesic = app.add_subcommand("geodesic", "geodesics between boundary points, integration, scenes");
  geodesic->require_subcommand(1);
  auto* between = geodesic->add_subcommand("between", "geodesic joining two boundary points");
  std::string from_text;
  std::string to_text;
  between->add_option("--from", from_text, "boundary point JSON")->required();
  between->add_option("--to", to_text, "boundary point JSON")->required();
  auto* integrate = geodesic->add_subcommand(
      "integrate", "integrate from {\"point\", \"tangent\"} and write a CSV path");
  std::string integrate_input;
  double t_end = 1.0;
  double step = 1e-3;
  integrate->add_option("--input", integrate_input, "JSON text instead of standard input");
  integrate->add_option("--t-end", t_end, "final parameter")->capture_default_str();
  integrate->add_option("--step", step, "step size")->check(CLI::PositiveNumber)->capture_default_str();
  auto* length = geodesic->add_subcommand("length", "arc length of the classified geodesic");
  std::string length_input;
  double t0 = 0.0;
  double t1 = 1.0;
  length->add_option("--input", length_input, "JSON text instead of standard input");
  length->add_option("--t0", t0, "start parameter")->capture_default_str();
  length->add_option("--t1", t1, "end parameter")->capture_default_str();
  auto* geodesic_scene = geodesic->add_subcommand("scene", "export the geodesic types as polylines");
  SceneOptions geodesic_opts;
  add_scene_options(geodesic_scene, geodesic_opts, "csv");

  // surface
  auto* surface = app.add_subcommand("surface", "totally geodesic hypersurfaces and lightcones");
  surface->require_subcommand(1);
  auto* through = surface->add_subcommand(
      "through", "hypersurface through {\"point\"} with flat normal {\"normal\": {u, v, w}}");
  std::string through_input;
  through->add_option("--input", through_input, "JSON text instead of standard input");
  auto* surface_scene = surface->add_subcommand("scene", "export quadrics or a lightcone as meshes");
  std::string kind = "quadrics";
  surface_scene->add_option("--kind", kind, "quadrics or lightcone")
      ->check(CLI::IsMember({"quadrics", "lightcone"}))
      ->capture_default_str();
  SceneOptions surface_opts;
  add_scene_options(surface_scene, surface_opts, "obj");

  // horosphere
  auto* horosphere = app.add_subcommand("horosphere", "horospheres from boundary points");
  horosphere->require_subcommand(1);
  auto* from = horosphere->add_subcommand("from", "the horosphere of parameter c at a boundary point");
  std::string horo_point;
  double horo_c = 1.0;
  std::string horo_test;
  from->add_option("--boundary", horo_point, "boundary point JSON")->required();
  from->add_option("--c", horo_c, "parameter c > 0")->capture_default_str();
  from->add_option("--test", horo_test, "point JSON {x, y, z} to test for membership");
  auto* horo_scene = horosphere->add_subcommand("scene", "export the three horosphere types");
  SceneOptions horo_opts;
  add_scene_options(horo_scene, horo_opts, "obj");

  // boundary-limit
  auto* limit = app.add_subcommand(
      "boundary-limit", "classify the limit of {\"samples\": [[x.., y..], ...]} on the boundary");
  std::string limit_input;
  limit->add_option("--input", limit_input, "JSON text instead of standard input");

  // strata
  auto* strata = app.add_subcommand("strata", "identification data of the boundary for (2, 1)");
  int intercepts = 7;
  strata->add_option("--intercepts", intercepts, "members per null family")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // isometry
  auto* isometry = app.add_subcommand("isometry", "the group G and the inversion J");
  isometry->require_subcommand(1);
  auto* apply = isometry->add_subcommand(
      "apply", "apply a word to {\"point\": {...}} or {\"boundary\": {...}}");
  std::string word_text;
  std::string apply_input;
  apply->add_option("--word", word_text, "word JSON, letters applied right to left")->required();
  apply->add_option("--input", apply_input, "JSON text instead of standard input");
  auto* word = isometry->add_subcommand("word", "a word sending the boundary origin to a target");
  std::string target_text;
  word->add_option("--target", target_text, "boundary point JSON")->required();
  auto* matrix = isometry->add_subcommand("matrix", "the matrix of a letter on R^{p,q+1}");
  std::string letter_text;
  matrix->add_option("--letter", letter_text, "one letter JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const hpq::Signature sig = hpq::signature_from_json(Json(sig_text));

    if (verify->parsed()) {
      const auto& names = hpq::verify_suites();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return kUsageError;
      }
      const auto report = hpq::run_verify(suite, sig, seed);
      const Json j = hpq::to_json(report);
      print(j);
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw std::runtime_error("cannot write " + report_path);
        f << j.dump(2) << "\n";
      }
      return report.passed() ? 0 : 1;
    }

    if (classify->parsed()) {
      const Json in = read_json(classify_input);
      const auto d = hpq::classify_geodesic(hpq::point_from_json(sig, in.at("point")),
                                            hpq::tangent_from_json(sig, in.at("tangent")));
      Json j = hpq::to_json(d);
      j["endpoints"] = endpoints_json(d);
      print(j);
      return 0;
    }

    if (between->parsed()) {
      const auto a = hpq::boundary_point_from_json(sig, Json::parse(from_text));
      const auto b = hpq::boundary_point_from_json(sig, Json::parse(to_text));
      print(hpq::to_json(hpq::geodesic_between(sig, a, b)));
      return 0;
    }

    if (integrate->parsed()) {
      const Json in = read_json(integrate_input);
      const auto p = hpq::point_from_json(sig, in.at("point"));
      const auto v = hpq::tangent_from_json(sig, in.at("tangent"));
      const auto path = hpq::integrate_geodesic(p, v, t_end, step);
      std::filesystem::create_directories(out_dir);
      const auto file = std::filesystem::path(out_dir) / "geodesic.csv";
      std::ofstream f(file);
      if (!f) throw std::runtime_error("cannot write " + file.string());
      f << "t";
      for (int i = 0; i < sig.nx(); ++i) f << ",x" << i + 1;
      for (int i = 0; i < sig.ny(); ++i) f << ",y" << i + 1;
      f << ",z\n";
      f.precision(17);
      for (std::size_t i = 0; i < path.samples.size(); ++i) {
        f << static_cast<double>(i) * path.step;
        const auto c = path.samples[i].position.coords();
        for (Eigen::Index k = 0; k < c.size(); ++k) f << "," << c(k);
        f << "\n";
      }
      Json j{{"path", file.string()},
             {"samples", path.samples.size()},
             {"step", path.step},
             {"halted_early", path.halted_early}};
      if (path.samples.size() >= 3) j["residual"] = hpq::geodesic_residual(path);
      print(j);
      return 0;
    }

    if (length->parsed()) {
      const Json in = read_json(length_input);
      const auto d = hpq::classify_geodesic(hpq::point_from_json(sig, in.at("point")),
                                            hpq::tangent_from_json(sig, in.at("tangent")));
      print(Json{{"variant", hpq::to_string(d.variant)},
                 {"t0", t0},
                 {"t1", t1},
                 {"length", hpq::arc_length(d, t0, t1)}});
      return 0;
    }

    if (geodesic_scene->parsed()) {
      print(run_scene(hpq::geodesics_scene(sig), geodesic_opts, out_dir));
      return 0;
    }

    if (through->parsed()) {
      const Json in = read_json(through_input);
      const auto h = hpq::hypersurface_through(hpq::point_from_json(sig, in.at("point")),
                                               hpq::tangent_from_json(sig, in.at("normal")));
      print(Json{{"hypersurface", hpq::to_json(h)},
                 {"induced_signature", hpq::to_json(hpq::signature_of(sig, h))}});
      return 0;
    }

    if (surface_scene->parsed()) {
      const auto scene = kind == "quadrics" ? hpq::quadrics_scene(sig) : hpq::lightcone_scene(sig);
      print(run_scene(scene, surface_opts, out_dir));
      return 0;
    }

    if (from->parsed()) {
      const auto bp = hpq::boundary_point_from_json(sig, Json::parse(horo_point));
      const auto h = hpq::horosphere_from(sig, bp, horo_c);
      const auto oracle = hpq::level_set_for(sig, h);
      Json j{{"horosphere", hpq::to_json(h)},
             {"level_set", {{"V", hpq::to_json(oracle.V())}, {"a", oracle.a()}}}};
      if (!horo_test.empty()) {
        const auto p = hpq::point_from_json(sig, Json::parse(horo_test));
        j["test"] = {{"point", hpq::to_json(p)},
                     {"residual", hpq::horosphere_residual(sig, h, p.coords())},
                     {"contains", hpq::horosphere_contains(sig, h, p, 1e-8)},
                     {"level_set_contains", oracle.contains(p, 1e-8)}};
      }
      print(j);
      return 0;
    }

    if (horo_scene->parsed()) {
      print(run_scene(hpq::horospheres_scene(sig), horo_opts, out_dir));
      return 0;
    }

    if (limit->parsed()) {
      const Json in = read_json(limit_input);
      std::vector<hpq::Vector> samples;
      for (const auto& s : in.at("samples")) samples.push_back(hpq::vector_from_json(s));
      print(hpq::to_json(hpq::boundary_limit(sig, samples)));
      return 0;
    }

    if (strata->parsed()) {
      print(hpq::strata_identification(intercepts));
      return 0;
    }

    if (apply->parsed()) {
      const auto w = hpq::word_from_json(sig, Json::parse(word_text));
      const Json in = read_json(apply_input);
      if (in.contains("point")) {
        print(Json{{"point", hpq::to_json(hpq::word_apply(w, hpq::point_from_json(sig, in.at("point"))))}});
      } else {
        const auto bp = hpq::boundary_point_from_json(sig, in.at("boundary"));
        print(Json{{"boundary", hpq::to_json(hpq::word_boundary_apply(sig, w, bp))}});
      }
      return 0;
    }

    if (word->parsed()) {
      const auto target = hpq::boundary_point_from_json(sig, Json::parse(target_text));
      const auto w = hpq::transitivity_word(sig, target);
      const auto image = hpq::word_boundary_apply(sig, w, hpq::FiniteBoundary{
          hpq::Vector::Zero(sig.horizontal_dim())});
      print(Json{{"word", hpq::to_json(w)},
                 {"image_of_origin", hpq::to_json(image)},
                 {"verified", hpq::same_boundary_point(sig, image, target, 1e-9)}});
      return 0;
    }

    if (matrix->parsed()) {
      const auto w = hpq::word_from_json(sig, Json::array({Json::parse(letter_text)}));
      print(Json{{"matrix", hpq::to_json(hpq::g_to_projective_action(sig, w.letters.at(0)))}});
      return 0;
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsageError;
}
