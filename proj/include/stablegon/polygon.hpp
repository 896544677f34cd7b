#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stablegon/dynkin.hpp"
#include "stablegon/geometry.hpp"

namespace sgon {

struct PolygonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StablePolygon {
  DynkinType type;
  std::vector<RatPoint> V;  // CCW
  std::vector<RatPoint> B;  // D only: {B_-, B_+}
  std::vector<RatPoint> W;  // E only, derived
  std::vector<RatPoint> U;  // E7 only, derived

  int h() const { return (int)V.size(); }
  static int wrap(int j, int m) { return ((j % m) + m) % m; }
  const RatPoint& v(int j) const { return V[wrap(j, h())]; }
  const RatPoint& w(int j) const { return W[wrap(j, h())]; }
  RatVec z(int j) const { return v(j) - v(j - 1); }
  RatPoint centroid() const;
};

// rows over z_0..z_{h-1}; every row must vanish on an E-type polygon
std::vector<std::vector<int>> edge_relations(const DynkinType& t);

// checks vertex count, nonzero edges, type relations and symmetry; derives satellites
StablePolygon validate_relations(const DynkinType& t, std::vector<RatPoint> vertices,
                                 std::vector<RatPoint> punctures = {});
void derive_satellites(StablePolygon& p);

struct HalfPlane {
  RatPoint a, b;  // interior on the left of a->b
};

struct ConvexRegion {
  std::vector<HalfPlane> sides;
  bool contains(const RatPoint& p, bool strict) const;
  int first_violation(const RatPoint& p, bool strict) const;  // -1 if inside
};

ConvexRegion level_diagonal_gon(const StablePolygon& p, int s);

struct StabilityReport {
  bool stable = false;
  std::vector<std::string> certificate;
  std::string clause;   // violated clause
  std::string failure;  // details
};

StabilityReport is_stable(const StablePolygon& p);
int required_level(const DynkinType& t);  // n-2 for D, n-3 for E, 0 otherwise

// E types: z_j = sum_m z[j][m] c_m over a rational basis of the relation nullspace,
// V_j, W_j likewise with V_0 = 0 and centroid subtracted
struct FormalModel {
  int h = 0, n = 0;
  std::vector<int> free_index;  // edge index carrying parameter m
  std::vector<std::vector<Rat>> z, V, W;
};
const FormalModel& e_formal_model(const DynkinType& t);

StablePolygon mirror(const StablePolygon& p);
StablePolygon rotate_rational(const StablePolygon& p, const Rat& t);
StablePolygon translate(const StablePolygon& p, const RatVec& v);

}  // namespace sgon
