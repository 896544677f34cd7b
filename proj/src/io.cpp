#include "stablegon/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace sgon {

DynkinType type_from_json(const json& j) {
  try {
    std::string f = j.at("dynkin_type").get<std::string>();
    if (f.size() != 1) throw InputError("dynkin_type must be A, D or E");
    DynkinType t{family_from_char(f[0]), j.at("rank").get<int>()};
    validate_type(t);
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad type fields: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json type_to_json(const DynkinType& t, json j) {
  j["dynkin_type"] = std::string(1, family_char(t.family));
  j["rank"] = t.rank;
  return j;
}

DynkinQuiver quiver_from_json(const json& j) {
  DynkinType t = type_from_json(j);
  try {
    std::string signs;
    for (const auto& s : j.at("orientation")) {
      std::string v = s.get<std::string>();
      if (v != "+" && v != "-") throw InputError("orientation entries must be \"+\" or \"-\"");
      signs += v;
    }
    return make_quiver(t, signs);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad orientation: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json quiver_to_json(const DynkinQuiver& q) {
  json j = type_to_json(q.type);
  json o = json::array();
  for (int e : q.eps) o.push_back(e > 0 ? "+" : "-");
  j["orientation"] = o;
  return j;
}

namespace {

RatPoint point_from_json(const json& p) {
  if (!p.is_array() || p.size() != 2) throw InputError("a point must be a pair of rational strings");
  try {
    return {parse_rat(p[0].get<std::string>()), parse_rat(p[1].get<std::string>())};
  } catch (const json::exception& e) {
    throw InputError(std::string("bad point: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json point_to_json(const RatPoint& p) { return json::array({format_rat(p.x), format_rat(p.y)}); }

}  // namespace

RawPolygon raw_polygon_from_json(const json& j) {
  if (!j.is_object()) throw InputError("polygon must be a JSON object");
  RawPolygon r;
  r.type = type_from_json(j);
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InputError("missing vertices");
  for (const auto& p : j["vertices"]) r.vertices.push_back(point_from_json(p));
  if (j.contains("punctures")) {
    if (!j["punctures"].is_array()) throw InputError("punctures must be an array");
    for (const auto& p : j["punctures"]) r.punctures.push_back(point_from_json(p));
  }
  return r;
}

StablePolygon polygon_from_json(const json& j) {
  RawPolygon r = raw_polygon_from_json(j);
  try {
    return validate_relations(r.type, r.vertices, r.punctures);
  } catch (const PolygonError& e) {
    throw InputError(std::string("relation check failed: ") + e.what());
  }
}

json polygon_to_json(const StablePolygon& p) {
  json j = type_to_json(p.type);
  json v = json::array();
  for (const auto& q : p.V) v.push_back(point_to_json(q));
  j["vertices"] = v;
  if (!p.B.empty()) {
    json b = json::array();
    for (const auto& q : p.B) b.push_back(point_to_json(q));
    j["punctures"] = b;
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[md[i] >> 4];
    s += hex[md[i] & 15];
  }
  return s;
}

}  // namespace sgon
