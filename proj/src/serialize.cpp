#include "hpq/serialize.hpp"

#include "hpq/errors.hpp"

namespace hpq {

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vector(m.row(i).transpose())));
  return a;
}

Json to_json(const Signature& sig) { return Json::array({sig.p(), sig.q()}); }

Json to_json(const HalfSpacePoint& p) {
  return Json{{"x", to_json(p.x())}, {"y", to_json(p.y())}, {"z", p.z()}};
}

Json to_json(const BoundaryPoint& bp) {
  if (const auto* f = std::get_if<FiniteBoundary>(&bp)) {
    return Json{{"stratum", "finite"}, {"point", to_json(f->w)}};
  }
  if (const auto* h = std::get_if<VerticalHyperplane>(&bp)) {
    return Json{{"stratum", "hyperplane"}, {"normal", to_json(h->normal)}, {"offset", h->offset}};
  }
  return Json{{"stratum", "infinity"}};
}

Json to_json(const GeodesicDescriptor& d) {
  Json j;
  j["variant"] = to_string(d.variant);
  j["basepoint"] = to_json(d.basepoint);
  j["direction"] = d.direction.size() ? to_json(d.direction) : Json(nullptr);
  j["A"] = d.A;
  j["C"] = d.C;
  j["eccentricity"] = d.eccentricity ? Json(*d.eccentricity) : Json(nullptr);
  j["causal_type"] = to_string(d.causal);
  j["complete"] = Json::array({d.complete[0], d.complete[1]});
  j["kappa"] = d.kappa;
  if (d.variant == GeodesicVariant::SpacelikeHyperbola) j["branch"] = d.branch;
  if (d.variant == GeodesicVariant::LightlikeSlantLine) j["slope"] = d.slope;
  return j;
}

Json to_json(const GeodesicBetween& g) {
  if (const auto* n = std::get_if<NoGeodesic>(&g)) {
    return Json{{"result", "none"}, {"reason", n->reason}};
  }
  Json pieces = Json::array();
  for (const auto& d : std::get<GeodesicConnection>(g).pieces) pieces.push_back(to_json(d));
  return Json{{"result", "geodesic"}, {"pieces", pieces}};
}

Json to_json(const TotallyGeodesicHypersurface& h) {
  if (const auto* q = std::get_if<QuadricHypersurface>(&h)) {
    return Json{{"variant", "Quadric"}, {"center", to_json(q->center)}, {"c", q->c}};
  }
  const auto& v = std::get<VerticalHypersurface>(h);
  return Json{{"variant", "Vertical"},
              {"basepoint", to_json(v.plane.basepoint)},
              {"basis", to_json(Matrix(v.plane.basis.transpose()))}};
}

Json to_json(const InducedSignature& s) {
  return Json{{"positive", s.positive},
              {"negative", s.negative},
              {"null_rank", s.null_rank},
              {"degenerate", s.degenerate}};
}

Json to_json(const Horosphere& h) {
  Json j;
  if (const auto* pl = std::get_if<HorizontalPlaneHorosphere>(&h.shape)) {
    j = Json{{"variant", "HorizontalPlane"}, {"c", pl->c}};
  } else if (const auto* wd = std::get_if<WedgeHorosphere>(&h.shape)) {
    j = Json{{"variant", "Wedge"}, {"normal", to_json(wd->normal)}, {"d", wd->d}, {"c", wd->c}};
  } else {
    const auto& pq = std::get<PiecewiseQuadricHorosphere>(h.shape);
    j = Json{{"variant", "PiecewiseQuadric"}, {"center", to_json(pq.center)}, {"c", pq.c}};
  }
  j["point_at_infinity"] = to_json(h.point_at_infinity);
  return j;
}

Json to_json(const IsometryWord& w) {
  Json a = Json::array();
  for (const auto& letter : w.letters) {
    if (const auto* g = std::get_if<IsometryG>(&letter)) {
      a.push_back(Json{{"type", "G"}, {"lambda", g->lambda}, {"A", to_json(g->A)}, {"t", to_json(g->t)}});
    } else {
      a.push_back(Json{{"type", "J"}});
    }
  }
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameterError("expected a JSON array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameterError("expected a JSON array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r]);
    if (row.size() != cols) throw InvalidParameterError("ragged matrix rows");
    m.row(r) = row.transpose();
  }
  return m;
}

Signature signature_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return Signature(j[0].get<int>(), j[1].get<int>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidParameterError("signature must be 'p,q'");
    return Signature(std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1)));
  }
  throw InvalidParameterError("signature must be [p, q] or 'p,q'");
}

namespace {

Vector part(const Json& j, const char* key, int n) {
  if (!j.contains(key)) {
    if (n == 0) return Vector(0);
    throw InvalidParameterError(std::string("missing field '") + key + "'");
  }
  Vector v = vector_from_json(j.at(key));
  if (v.size() != n) {
    throw DimensionError(std::string("field '") + key + "' must have length " + std::to_string(n));
  }
  return v;
}

}  // namespace

HalfSpacePoint point_from_json(const Signature& sig, const Json& j) {
  return HalfSpacePoint(sig, part(j, "x", sig.nx()), part(j, "y", sig.ny()), j.at("z").get<double>());
}

Tangent tangent_from_json(const Signature& sig, const Json& j) {
  Vector h(sig.horizontal_dim());
  h << part(j, "u", sig.nx()), part(j, "v", sig.ny());
  return Tangent{h, j.value("w", 0.0)};
}

BoundaryPoint boundary_point_from_json(const Signature& sig, const Json& j) {
  const auto stratum = j.at("stratum").get<std::string>();
  BoundaryPoint bp;
  if (stratum == "finite") {
    bp = FiniteBoundary{vector_from_json(j.at("point"))};
  } else if (stratum == "hyperplane") {
    bp = VerticalHyperplane{vector_from_json(j.at("normal")), j.at("offset").get<double>()};
  } else if (stratum == "infinity") {
    bp = InfinityPoint{};
  } else {
    throw InvalidBoundaryError("unknown stratum '" + stratum + "'");
  }
  validate(sig, bp);
  return bp;
}

IsometryWord word_from_json(const Signature& sig, const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidParameterError("a word is a nonempty JSON array");
  IsometryWord w;
  for (const auto& e : j) {
    const auto type = e.at("type").get<std::string>();
    if (type == "J") {
      w.letters.emplace_back(InversionJ{});
    } else if (type == "G") {
      const int n = sig.horizontal_dim();
      Matrix a = e.contains("A") ? matrix_from_json(e.at("A")) : Matrix(Matrix::Identity(n, n));
      Vector t = e.contains("t") ? vector_from_json(e.at("t")) : Vector(Vector::Zero(n));
      w.letters.emplace_back(make_isometry(sig, e.value("lambda", 1.0), a, t));
    } else {
      throw InvalidParameterError("unknown letter type '" + type + "'");
    }
  }
  return w;
}

}  // namespace hpq
