#include "doctest.h"

#include <algorithm>

#include "stablegon/diagonals.hpp"
#include "stablegon/realize.hpp"

using namespace sgon;

namespace {

StablePolygon zigzag_hexagon() {
  // counterclockwise from the lowest point
  return validate_relations({Family::A, 5},
                            {{-1, 0}, {1, 0}, {3, 3}, {Rat(7, 2), 7}, {-1, 10}, {-4, 5}});
}

std::vector<Arrow> sorted_arrows(const IntersectionQuiver& q) {
  auto a = q.ungraded();
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("A2 triangle diagonals") {
  auto p = validate_relations({Family::A, 2}, {{0, -1}, {0, 1}, {-1, 0}});
  auto a = stability_function(p);
  REQUIRE(a.phases.size() == 3);
  std::vector<RatVec> v;
  for (const auto& ph : a.phases) v.push_back(ph.vec);
  CHECK(v == std::vector<RatVec>{{-1, 1}, {0, 2}, {1, 1}});
  CHECK(a.Z.Z == std::vector<RatVec>{{-1, 1}, {1, 1}});
  CHECK(a.phases[1].dim == DimVector{1, 1});
  REQUIRE(a.quiver.arrows.size() == 1);
  CHECK(a.quiver.arrows[0] == GradedArrow{1, 2, 1});
  // decreasing phase: S1, S1+S2, S2
  CHECK(a.phases[0].dim == DimVector{1, 0});
  CHECK(a.phases[2].dim == DimVector{0, 1});
}

TEST_CASE("hexagon with a zigzag quiver") {
  auto a = stability_function(zigzag_hexagon());
  CHECK(a.phases.size() == 15);
  CHECK(a.Z.Z == std::vector<RatVec>{{2, 0}, {2, 3}, {-7, 2}, {Rat(15, 2), 2}, {Rat(-9, 2), 3}});
  CHECK(sorted_arrows(a.quiver) == std::vector<Arrow>{{2, 1}, {3, 2}, {3, 4}, {5, 4}});
  for (const auto& ar : a.quiver.arrows) CHECK(ar.grade == 1);
  bool found = false;
  for (const auto& ph : a.phases)
    if (ph.vec == RatVec{-3, 5}) {
      CHECK(ph.dim == DimVector{1, 1, 1, 0, 0});
      found = true;
    }
  CHECK(found);
  CHECK(realized_quiver(a) == make_quiver({Family::A, 5}, "--+-"));
}

TEST_CASE("class counts") {
  for (int n = 4; n <= 8; ++n) {
    auto q = all_orientations({Family::D, n})[3];
    auto m = admissible_diagonals(realize(q));
    CHECK(m.classes.size() == (size_t)(n * (n - 1)));
  }
  auto m = admissible_diagonals(realize(make_quiver({Family::E, 8}, "-+-+-+-")));
  CHECK(m.classes.size() == 120);
}

TEST_CASE("every class is upward and additive") {
  auto p = realize(make_quiver({Family::E, 7}, "-+--+-"));
  auto a = stability_function(p);
  for (const auto& ph : a.phases) {
    CHECK(is_upward(ph.vec));
    CHECK(a.Z.charge(ph.dim) == ph.vec);
  }
  std::vector<DimVector> dims;
  for (const auto& ph : a.phases) dims.push_back(ph.dim);
  auto roots = positive_roots(p.type);
  std::sort(dims.begin(), dims.end());
  std::sort(roots.begin(), roots.end());
  CHECK(dims == roots);
}

TEST_CASE("E decomposition does not depend on split order") {
  auto p = realize(make_quiver({Family::E, 6}, "+-+-+"));
  auto m = admissible_diagonals(p);
  auto s = simples(m);
  auto d0 = decompose_all(m, s, 0);
  auto d1 = decompose_all(m, s, 12345);
  CHECK(d0 == d1);
  std::string why;
  CHECK(split_paths_agree(m, s, d0, &why));
}

TEST_CASE("D punctures are never joined") {
  auto p = realize(make_quiver({Family::D, 4}, "+++"));
  auto m = admissible_diagonals(p);
  CHECK_FALSE(m.find({'-', 0}, {'+', 0}).has_value());
}

TEST_CASE("D5 octagon with a trivalent sink") {
  auto q = make_quiver({Family::D, 5}, "-+--");
  auto p = realize(q);
  CHECK(p.h() == 8);
  auto a = stability_function(p);
  CHECK(sorted_arrows(a.quiver) == std::vector<Arrow>{{2, 1}, {2, 3}, {4, 3}, {5, 3}});
  for (const auto& ar : a.quiver.arrows) CHECK(ar.grade == 1);
}

TEST_CASE("E intersection graph is the E diagram") {
  auto a = stability_function(realize(make_quiver({Family::E, 8}, "+++++++")));
  auto arrows = sorted_arrows(a.quiver);
  CHECK(arrows.size() == 7);
  bool three_four = false;
  for (const auto& ar : arrows) three_four = three_four || (std::min(ar.src, ar.dst) == 3 && std::max(ar.src, ar.dst) == 4);
  CHECK(three_four);
}
