#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablegon/dynkin.hpp"
#include "stablegon/geometry.hpp"
#include "stablegon/polygon.hpp"

namespace sgon {

struct DiagonalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tag: 'V', 'W', '-' (B_-), '+' (B_+)
struct Endpoint {
  char tag = 'V';
  int idx = 0;
  bool operator==(const Endpoint& o) const { return tag == o.tag && idx == o.idx; }
  bool operator!=(const Endpoint& o) const { return !(*this == o); }
  bool operator<(const Endpoint& o) const { return tag != o.tag ? tag < o.tag : idx < o.idx; }
  std::string str() const;
};

using SymPair = std::pair<Endpoint, Endpoint>;  // (tail, head)

struct DiagonalClass {
  std::vector<SymPair> members;  // each oriented upward
  SymPair rep;
  RatVec vec;
  RatPoint tail, head;
};

struct DiagonalModel {
  StablePolygon poly;
  std::vector<DiagonalClass> classes;
  std::map<SymPair, int> index;  // key with first < second
  std::vector<std::vector<Rat>> formal;  // E only: formal vector of each class (upward orientation)

  RatPoint point(const Endpoint& e) const;
  std::optional<int> find(const Endpoint& a, const Endpoint& b) const;
  // orient a,b upward; false if the points coincide
  bool is_up(const Endpoint& a, const Endpoint& b) const;
};

DiagonalModel admissible_diagonals(const StablePolygon& p);
struct PointTriple {
  Endpoint a, b, c;
};
// triples of points joined pairwise by admissible diagonals
std::vector<PointTriple> admissible_triangles(const DiagonalModel& m);

// class ids sorted by decreasing arg
std::vector<int> upward_diagonals(const DiagonalModel& m);
inline RatVec central_charge(const DiagonalClass& c) { return c.vec; }

struct SimpleSet {
  std::vector<int> cls;         // class of s_1..s_n
  std::vector<SymPair> pairs;   // representative used for s_i
  std::vector<Endpoint> yorder; // points bottom to top
  std::vector<std::string> locator;
  int d_case = 0;    // D: 1 if B = Y_{+-1}, 2 if B = Y_{+-2}
  int e_shift = 0;   // E: relabeling offset r
  bool e_left = false;  // E: Delta_+ = Delta_L
};

SimpleSet simples(const DiagonalModel& m);

// all upward classes; E uses memoized triangle splitting with split order drawn from seed
std::vector<DimVector> decompose_all(const DiagonalModel& m, const SimpleSet& s, std::uint64_t seed = 0);
DimVector decompose(const DiagonalModel& m, const SimpleSet& s, int cls);
// E only: every available split of every class agrees with the memoized answer
bool split_paths_agree(const DiagonalModel& m, const SimpleSet& s, const std::vector<DimVector>& dims,
                       std::string* detail = nullptr);

struct GradedArrow {
  int src = 0, dst = 0, grade = 0;  // 1-based simples
  bool operator<(const GradedArrow& o) const {
    return src != o.src ? src < o.src : (dst != o.dst ? dst < o.dst : grade < o.grade);
  }
  bool operator==(const GradedArrow& o) const { return src == o.src && dst == o.dst && grade == o.grade; }
};

struct IntersectionQuiver {
  int n = 0;
  std::vector<GradedArrow> arrows;
  std::vector<Arrow> ungraded() const;
};

std::vector<GradedArrow> essential_intersections(const DiagonalModel& m, const SimpleSet& s);
// throws DiagonalError unless the underlying graph is the Dynkin diagram of the type
IntersectionQuiver intersection_quiver(const DiagonalModel& m, const SimpleSet& s);

struct StabilityFunction {
  std::vector<RatVec> Z;  // Z[i] = charge of S_{i+1}
  RatVec charge(const DimVector& d) const;
  // phase order of Z(a) vs Z(b), both assumed upward
  Order cmp_phase(const DimVector& a, const DimVector& b) const;
};

struct PhaseEntry {
  int cls = 0;
  DimVector dim;
  RatVec vec;
};

struct PolygonAnalysis {
  DiagonalModel model;
  SimpleSet simple;
  IntersectionQuiver quiver;
  StabilityFunction Z;
  std::vector<PhaseEntry> phases;  // decreasing arg
};

PolygonAnalysis stability_function(const StablePolygon& p);

// the quiver realized by p as an orientation of the canonical diagram
DynkinQuiver realized_quiver(const PolygonAnalysis& a);

}  // namespace sgon
