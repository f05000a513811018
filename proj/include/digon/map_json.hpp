#pragma once

// JSON form of MapExpr:
//   {"kind": "moebius",      "base": {"re": x, "im": y}}
//   {"kind": "automorphism", "a": {"re": x, "im": y}, "rotation": r}
//   {"kind": "pick",         "alpha": a}
//   {"kind": "square"}
//   {"kind": "inverse",      "of": <node>}
//   {"kind": "compose",      "maps": [<node>, ...]}   first element acts first

#include "json.hpp"

#include "digon/conformal_maps.hpp"

namespace digon {

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const MapExpr& expr);
/// Throws InputError on malformed input and DomainError on invalid parameters.
MapExpr map_from_json(const nlohmann::json& j);

}  // namespace digon
