#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "stablegon/dynkin.hpp"
#include "stablegon/polygon.hpp"

namespace sgon {

using json = nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DynkinType type_from_json(const json& j);
json type_to_json(const DynkinType& t, json j = json::object());

DynkinQuiver quiver_from_json(const json& j);
json quiver_to_json(const DynkinQuiver& q);

struct RawPolygon {
  DynkinType type;
  std::vector<RatPoint> vertices, punctures;
};

// well-formed but not yet checked against the relations
RawPolygon raw_polygon_from_json(const json& j);
// validated; satellites re-derived
StablePolygon polygon_from_json(const json& j);
json polygon_to_json(const StablePolygon& p);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string sha256_hex(const std::string& data);

}  // namespace sgon
