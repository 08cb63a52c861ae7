#pragma once

#include <json.hpp>

#include "hpq/geodesics.hpp"
#include "hpq/horospheres.hpp"
#include "hpq/isometries.hpp"
#include "hpq/submanifolds.hpp"

namespace hpq {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Signature& sig);
Json to_json(const HalfSpacePoint& p);
Json to_json(const BoundaryPoint& bp);
Json to_json(const GeodesicDescriptor& d);
Json to_json(const GeodesicBetween& g);
Json to_json(const TotallyGeodesicHypersurface& h);
Json to_json(const InducedSignature& s);
Json to_json(const Horosphere& h);
Json to_json(const IsometryWord& w);

Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
/// "[p, q]" or "p,q".
Signature signature_from_json(const Json& j);
/// {"x": [...], "y": [...], "z": z}; missing x or y means empty.
HalfSpacePoint point_from_json(const Signature& sig, const Json& j);
/// {"u": [...], "v": [...], "w": w}.
Tangent tangent_from_json(const Signature& sig, const Json& j);
BoundaryPoint boundary_point_from_json(const Signature& sig, const Json& j);
/// Ordered list of {"type": "G", "lambda", "A", "t"} or {"type": "J"}.
IsometryWord word_from_json(const Signature& sig, const Json& j);

}  // namespace hpq
