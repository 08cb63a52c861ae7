#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "hpq/geodesics.hpp"
#include "hpq/horospheres.hpp"
#include "hpq/serialize.hpp"
#include "hpq/submanifolds.hpp"

namespace hpq {

using SceneObject =
    std::variant<GeodesicDescriptor, TotallyGeodesicHypersurface, Horosphere, Lightcone>;

struct NamedObject {
  std::string name;
  SceneObject object;
};

enum class SceneFormat { Csv, Json, Obj };

SceneFormat scene_format_from_string(const std::string& s);

/// Objects exported over the window [-R, R]^{p+q-1} x (0, R].
struct Scene {
  Signature sig;
  std::vector<NamedObject> objects;
  double R = 3.0;
  int grid = 64;
  SceneFormat format = SceneFormat::Obj;
};

struct Mesh {
  std::vector<Vector> vertices;
  std::vector<std::array<int, 3>> faces;
};

struct ExportedFile {
  std::string path;
  std::string object;
  std::size_t vertices = 0;
  std::size_t faces = 0;
  double max_residual = 0.0;  // geodesic residual for curves, equation residual for surfaces
};

/// Triangulated surface over the window; needs p + q = 3.
Mesh surface_mesh(const Scene& scene, const SceneObject& object);
/// Affine-parameter samples of a curve at a uniform step, restricted to the
/// window (longest run inside it). Returns the parameters alongside.
std::vector<std::pair<double, Vector>> curve_samples(const Scene& scene,
                                                     const GeodesicDescriptor& d,
                                                     double& step);

/// Writes one file per object (curves always as CSV polylines unless the
/// format is JSON) and returns what was written. Output is deterministic.
std::vector<ExportedFile> export_scene(const Scene& scene, const std::filesystem::path& dir);

Scene quadrics_scene(const Signature& sig);
Scene lightcone_scene(const Signature& sig);
Scene geodesics_scene(const Signature& sig);
Scene horospheres_scene(const Signature& sig);

/// Identification data of the boundary at infinity for signature (2, 1):
/// R^{1,1} drawn inside a diamond, the two null line families compactified by
/// identifying opposite sides, and infinity at the vertices.
Json strata_identification(int intercepts);

}  // namespace hpq
