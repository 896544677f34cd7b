#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "stablegon/diagonals.hpp"
#include "stablegon/dynkin.hpp"
#include "stablegon/polygon.hpp"

namespace sgon {

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CannotDeform : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int max_candidates = 64;
  int max_denominator_bits = 40;
  bool use_cache = true;
  std::string cache_dir;  // empty: compiled-in fixture directory
};

// E: the symmetric polygon with c_m = exp(2 pi i f_m / h), snapped to 30 bits
StablePolygon e_reference_polygon(const DynkinType& t);
// E: admissible triangles, each listed counterclockwise as on the reference polygon
const std::vector<PointTriple>& e_reference_triangles(const DynkinType& t);
// E: first admissible triangle whose orientation differs from the reference
std::optional<std::string> misoriented_triangle(const StablePolygon& p);

// stable, E triangles oriented as on the reference, and its ungraded intersection quiver equals q
bool certifies(const StablePolygon& p, const DynkinQuiver& q, std::string* why = nullptr);

StablePolygon realize_A(const DynkinQuiver& q);
StablePolygon realize_D(const DynkinQuiver& q);
// case (b') through the opposite quiver and the mirror
StablePolygon realize_D_mirrored(const DynkinQuiver& q);
StablePolygon realize_E(const DynkinQuiver& q, const SearchConfig& cfg = {});
StablePolygon realize(const DynkinQuiver& q, const SearchConfig& cfg = {});

// E: numeric search for a polygon realizing q; leaf_args constrains arg Z(S_1), Z(S_3), Z(S_n) near 0
StablePolygon search_stable_E(const DynkinQuiver& q, bool leaf_args, const SearchConfig& cfg);
// E: flip the arrows at the leaf simple (1, 3 or n); direction +1 pushes arg towards pi
StablePolygon deform_leaf(const StablePolygon& p, int leaf, int direction);

// polygon of an E type from parameters c_m = (re, im) over the formal basis
StablePolygon e_polygon_from_params(const DynkinType& t, const std::vector<Rat>& re, const std::vector<Rat>& im);

}  // namespace sgon
