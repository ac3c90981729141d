#include <fstream>
#include <sstream>

#include "strata/error.hpp"
#include "strata/surface.hpp"

namespace strata {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, "malformed surface document: " + what);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) malformed(where + " is not a number");
  return j.get<double>();
}

int index(const json& j, const std::string& where) {
  if (!j.is_number_integer()) malformed(where + " is not an integer");
  return j.get<int>();
}

EdgeRef edge_ref(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) malformed(where + " must be [polygon, edge]");
  return {index(j[0], where + "[0]"), index(j[1], where + "[1]")};
}

}  // namespace

HalfTranslationSurface parse_surface(const json& doc) {
  if (!doc.is_object()) malformed("top level is not an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "polygons" && key != "pairings") malformed("unknown field '" + key + "'");
  }
  if (!doc.contains("polygons") || !doc["polygons"].is_array()) {
    malformed("missing 'polygons' array");
  }
  if (!doc.contains("pairings") || !doc["pairings"].is_array()) {
    malformed("missing 'pairings' array");
  }

  std::vector<std::vector<Vec2>> polygons;
  for (std::size_t p = 0; p < doc["polygons"].size(); ++p) {
    const json& jp = doc["polygons"][p];
    const std::string where = "polygons[" + std::to_string(p) + "]";
    if (!jp.is_array()) malformed(where + " is not an array");
    std::vector<Vec2> poly;
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const json& jv = jp[i];
      const std::string w = where + "[" + std::to_string(i) + "]";
      if (!jv.is_array() || jv.size() != 2) malformed(w + " must be [re, im]");
      poly.emplace_back(number(jv[0], w), number(jv[1], w));
    }
    polygons.push_back(std::move(poly));
  }

  std::vector<Pairing> pairings;
  for (std::size_t k = 0; k < doc["pairings"].size(); ++k) {
    const json& jk = doc["pairings"][k];
    const std::string where = "pairings[" + std::to_string(k) + "]";
    if (!jk.is_object() || !jk.contains("a") || !jk.contains("b") ||
        !jk.contains("sign")) {
      malformed(where + " needs fields a, b, sign");
    }
    pairings.push_back({edge_ref(jk["a"], where + ".a"), edge_ref(jk["b"], where + ".b"),
                        index(jk["sign"], where + ".sign")});
  }
  return HalfTranslationSurface(std::move(polygons), std::move(pairings));
}

HalfTranslationSurface parse_surface(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  return parse_surface(doc);
}

HalfTranslationSurface load_surface(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open surface file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_surface(buf.str());
}

nlohmann::ordered_json to_json(const HalfTranslationSurface& s) {
  nlohmann::ordered_json doc;
  doc["polygons"] = nlohmann::ordered_json::array();
  for (const auto& poly : s.polygons()) {
    auto jp = nlohmann::ordered_json::array();
    for (Vec2 w : poly) jp.push_back({w.real(), w.imag()});
    doc["polygons"].push_back(std::move(jp));
  }
  doc["pairings"] = nlohmann::ordered_json::array();
  for (const Pairing& p : s.pairings()) {
    nlohmann::ordered_json jp;
    jp["a"] = {p.a.polygon, p.a.edge};
    jp["b"] = {p.b.polygon, p.b.edge};
    jp["sign"] = p.sign;
    doc["pairings"].push_back(std::move(jp));
  }
  return doc;
}

std::string serialize(const HalfTranslationSurface& s) { return to_json(s).dump(); }

}  // namespace strata
