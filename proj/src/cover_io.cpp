#include "ramcov/cover_io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace ramcov::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& require_object(const json& j, const std::string& path,
                           std::initializer_list<const char*> required,
                           std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const char* key : required)
    if (!j.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) fail(path, "unknown key \"" + key + "\"");
  }
  return j;
}

std::int64_t integer(const json& j, const std::string& path) {
  if (j.is_number_float()) fail(path, "floating-point literal where an exact integer is required");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      fail(path, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::pair<std::string, std::string> id_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a pair of component ids");
  return {string(j[0], path + "[0]"), string(j[1], path + "[1]")};
}

local::Vec2 vec2(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected an integer pair");
  return {integer(j[0], path + "[0]"), integer(j[1], path + "[1]")};
}

model::LocalSpec local_spec(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "lattice needs exactly two generators");
    return local::LatticeSubgroup{vec2(j[0], path + "[0]"), vec2(j[1], path + "[1]")};
  }
  require_object(j, path, {"n", "q", "m1", "m2"});
  return model::LocalParameters{integer(j["n"], path + ".n"), integer(j["q"], path + ".q"),
                                integer(j["m1"], path + ".m1"), integer(j["m2"], path + ".m2")};
}

model::BaseGeometry parse_base(const json& j) {
  require_object(j, "base",
                 {"genus_C", "KX_sq", "euler_X", "KX_dot_F", "components", "crossings"},
                 {"intersections"});
  model::BaseGeometry base;
  base.genus_C = integer(j["genus_C"], "base.genus_C");
  base.KX_sq = integer(j["KX_sq"], "base.KX_sq");
  base.euler_X = integer(j["euler_X"], "base.euler_X");
  base.KX_dot_F = integer(j["KX_dot_F"], "base.KX_dot_F");

  const json& comps = array(j["components"], "base.components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = "base.components[" + std::to_string(i) + "]";
    const json& c = require_object(comps[i], p, {"id", "genus", "self_int", "KX_dot", "fiber_deg"});
    base.components.push_back({string(c["id"], p + ".id"), integer(c["genus"], p + ".genus"),
                               integer(c["self_int"], p + ".self_int"),
                               integer(c["KX_dot"], p + ".KX_dot"),
                               integer(c["fiber_deg"], p + ".fiber_deg")});
  }

  const json& xs = array(j["crossings"], "base.crossings");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string p = "base.crossings[" + std::to_string(i) + "]";
    const json& x = require_object(xs[i], p, {"index", "pair"});
    auto [first, second] = id_pair(x["pair"], p + ".pair");
    base.crossings.push_back({integer(x["index"], p + ".index"), first, second});
  }

  if (j.contains("intersections")) {
    const json& is = array(j["intersections"], "base.intersections");
    for (std::size_t i = 0; i < is.size(); ++i) {
      const std::string p = "base.intersections[" + std::to_string(i) + "]";
      const json& x = require_object(is[i], p, {"pair", "count"});
      auto [first, second] = id_pair(x["pair"], p + ".pair");
      base.intersections.push_back({first, second, integer(x["count"], p + ".count")});
    }
  }
  return base;
}

std::int64_t crossing_key(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size() || std::to_string(v) != key)
    fail(path, "key \"" + key + "\" is not a decimal crossing index");
  return v;
}

model::CoverDescription parse_cover(const json& j) {
  require_object(j, "cover", {"degree", "ramification", "points_above"});
  model::CoverDescription cover;
  cover.degree = integer(j["degree"], "cover.degree");

  if (!j["ramification"].is_object()) fail("cover.ramification", "expected an object");
  for (const auto& [id, sheets] : j["ramification"].items()) {
    const std::string p = "cover.ramification." + id;
    auto& out = cover.ramification[id];
    for (std::size_t k = 0; k < array(sheets, p).size(); ++k) {
      const std::string q = p + "[" + std::to_string(k) + "]";
      const json& s = require_object(sheets[k], q, {"e", "f"});
      out.push_back({integer(s["e"], q + ".e"), integer(s["f"], q + ".f")});
    }
  }

  if (!j["points_above"].is_object()) fail("cover.points_above", "expected an object");
  for (const auto& [key, points] : j["points_above"].items()) {
    const std::string p = "cover.points_above." + key;
    auto& out = cover.points_above[crossing_key(key, p)];
    for (std::size_t k = 0; k < array(points, p).size(); ++k) {
      const std::string q = p + "[" + std::to_string(k) + "]";
      const json& y = require_object(points[k], q, {"j", "jp", "local"});
      out.push_back({integer(y["j"], q + ".j"), integer(y["jp"], q + ".jp"),
                     local_spec(y["local"], q + ".local")});
    }
  }
  return cover;
}

}  // namespace

CoverDocument parse_document(const json& doc) {
  require_object(doc, "document", {"base", "cover"});
  return CoverDocument{parse_base(doc["base"]), parse_cover(doc["cover"])};
}

CoverDocument parse_document_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_document(doc);
}

CoverDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_document_text(text.str());
}

json to_json(const model::LocalSpec& spec) {
  if (const auto* l = std::get_if<local::LatticeSubgroup>(&spec))
    return json::array({json::array({l->g1[0], l->g1[1]}), json::array({l->g2[0], l->g2[1]})});
  const auto& p = std::get<model::LocalParameters>(spec);
  return json{{"n", p.n}, {"q", p.q}, {"m1", p.m1}, {"m2", p.m2}};
}

json to_json(const CoverDocument& doc) {
  const auto& b = doc.base;
  json components = json::array();
  for (const auto& c : b.components)
    components.push_back({{"id", c.id},
                          {"genus", c.genus},
                          {"self_int", c.self_int},
                          {"KX_dot", c.KX_dot},
                          {"fiber_deg", c.fiber_deg}});
  json crossings = json::array();
  for (const auto& x : b.crossings)
    crossings.push_back({{"index", x.index}, {"pair", json::array({x.first, x.second})}});

  json base{{"genus_C", b.genus_C},   {"KX_sq", b.KX_sq},           {"euler_X", b.euler_X},
            {"KX_dot_F", b.KX_dot_F}, {"components", components}, {"crossings", crossings}};
  if (!b.intersections.empty()) {
    json is = json::array();
    for (const auto& pc : b.intersections)
      is.push_back({{"pair", json::array({pc.first, pc.second})}, {"count", pc.count}});
    base["intersections"] = is;
  }

  json ram = json::object();
  for (const auto& [id, sheets] : doc.cover.ramification) {
    json list = json::array();
    for (const auto& s : sheets) list.push_back({{"e", s.e}, {"f", s.f}});
    ram[id] = list;
  }
  json above = json::object();
  for (const auto& [index, points] : doc.cover.points_above) {
    json list = json::array();
    for (const auto& p : points)
      list.push_back({{"j", p.j}, {"jp", p.jp}, {"local", to_json(p.local)}});
    above[std::to_string(index)] = list;
  }
  return json{{"base", base},
              {"cover", {{"degree", doc.cover.degree}, {"ramification", ram}, {"points_above", above}}}};
}

}  // namespace ramcov::io
