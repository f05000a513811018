#include "digon/map_json.hpp"

namespace digon {

using nlohmann::json;

json complex_to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() ||
      !j["im"].is_number()) {
    throw InputError("expected a complex number {\"re\": x, \"im\": y}");
  }
  return {j["re"].get<double>(), j["im"].get<double>()};
}

json map_to_json(const MapExpr& expr) {
  return std::visit(
      [](const auto& n) -> json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NormalizedMoebius>) {
          return {{"kind", "moebius"}, {"base", complex_to_json(n.base.value())}};
        } else if constexpr (std::is_same_v<T, Automorphism>) {
          return {{"kind", "automorphism"}, {"a", complex_to_json(n.a.value())}, {"rotation", n.rotation}};
        } else if constexpr (std::is_same_v<T, PickMap>) {
          return {{"kind", "pick"}, {"alpha", n.alpha}};
        } else if constexpr (std::is_same_v<T, SquareMap>) {
          return {{"kind", "square"}};
        } else if constexpr (std::is_same_v<T, MapExpr::Inverse>) {
          return {{"kind", "inverse"}, {"of", map_to_json(n.of)}};
        } else {
          json maps = json::array();
          for (const auto& m : n.maps) maps.push_back(map_to_json(m));
          return {{"kind", "compose"}, {"maps", maps}};
        }
      },
      expr.node());
}

namespace {

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InputError(std::string("map node is missing numeric field \"") + key + "\"");
  }
  return j[key].get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("map node is missing field \"") + key + "\"");
  return j[key];
}

}  // namespace

MapExpr map_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("map node must be an object with a string \"kind\"");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "moebius") return MapExpr::moebius(DiskPoint{complex_from_json(field(j, "base"))});
  if (kind == "automorphism") {
    return MapExpr::automorphism(DiskPoint{complex_from_json(field(j, "a"))}, number_field(j, "rotation"));
  }
  if (kind == "pick") return MapExpr::pick(number_field(j, "alpha"));
  if (kind == "square") return MapExpr::square();
  if (kind == "inverse") return map_from_json(field(j, "of")).inverse();
  if (kind == "compose") {
    const json& maps = field(j, "maps");
    if (!maps.is_array()) throw InputError("\"maps\" must be an array");
    std::vector<MapExpr> parts;
    for (const auto& m : maps) parts.push_back(map_from_json(m));
    if (parts.empty()) return MapExpr::identity();
    return MapExpr::compose(std::move(parts));
  }
  throw InputError("unknown map kind \"" + kind + "\"");
}

}  // namespace digon
