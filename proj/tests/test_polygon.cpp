#include "doctest.h"

#include "stablegon/polygon.hpp"
#include "stablegon/realize.hpp"

using namespace sgon;

namespace {

StablePolygon a2_triangle() { return validate_relations({Family::A, 2}, {{0, -1}, {0, 1}, {-1, 0}}); }

}  // namespace

TEST_CASE("A polygons need closure only") {
  auto p = a2_triangle();
  CHECK(p.h() == 3);
  CHECK(is_stable(p).stable);
  CHECK_THROWS_AS(validate_relations({Family::A, 2}, {{0, 0}, {1, 0}}), PolygonError);
  CHECK_THROWS_AS(validate_relations({Family::A, 2}, {{0, 0}, {0, 0}, {1, 1}}), PolygonError);
}

TEST_CASE("clockwise A polygon is not stable") {
  auto p = validate_relations({Family::A, 2}, {{0, -1}, {-1, 0}, {0, 1}});
  auto r = is_stable(p);
  CHECK_FALSE(r.stable);
  CHECK(r.clause == "positively convex");
}

TEST_CASE("D symmetry is enforced") {
  std::vector<RatPoint> hex{{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  auto p = validate_relations({Family::D, 4}, hex, {{0, 0}, {0, 0}});
  CHECK(is_stable(p).stable);
  hex[1] = {1, 3};
  try {
    validate_relations({Family::D, 4}, hex, {{0, 0}, {0, 0}});
    FAIL("accepted an asymmetric hexagon");
  } catch (const PolygonError& e) {
    CHECK(std::string(e.what()).find("central symmetry") != std::string::npos);
  }
}

TEST_CASE("puncture outside the level gon") {
  auto p = realize(make_quiver({Family::D, 5}, "-+--"));
  REQUIRE(is_stable(p).stable);
  RatPoint o = p.centroid();
  RatVec far = p.V[0] - o;
  RatPoint b = o + Rat(2) * far;
  auto bad = validate_relations(p.type, p.V, {b, o - far - far});
  auto r = is_stable(bad);
  CHECK_FALSE(r.stable);
  CHECK(r.clause == "punctures inside level-(n-2) diagonal-gon");
}

TEST_CASE("E8 triangle relation") {
  auto p = realize(make_quiver({Family::E, 8}, "-------"));
  auto v = p.V;
  v[1] = v[1] + RatVec{Rat(1, 1000), 0};
  try {
    validate_relations(p.type, v);
    FAIL("accepted a broken E8 polygon");
  } catch (const PolygonError& e) {
    CHECK(std::string(e.what()).find("relation") != std::string::npos);
  }
}

TEST_CASE("satellites") {
  auto p6 = realize(make_quiver({Family::E, 6}, "-----"));
  for (int j = 0; j < p6.h(); ++j) CHECK(p6.w(j) - p6.v(j) == p6.z(j + 4));
  auto p8 = realize(make_quiver({Family::E, 8}, "-------"));
  for (int j = 0; j < p8.h(); ++j) CHECK(p8.w(j - 1) == p8.v(j) + p8.z(j + 10));
  auto p7 = realize(make_quiver({Family::E, 7}, "------"));
  for (int j = 0; j < p7.h(); ++j) CHECK(p7.U[j] == p7.w(j + 1) + p7.z(j + 7));
}

TEST_CASE("level diagonal gons") {
  std::vector<RatPoint> hex{{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  auto p = validate_relations({Family::D, 4}, hex, {{0, 0}, {0, 0}});
  auto g1 = level_diagonal_gon(p, 1);
  CHECK(g1.contains({Rat(3, 2), 0}, true));
  CHECK_FALSE(g1.contains({3, 0}, false));
  auto g2 = level_diagonal_gon(p, 2);
  CHECK(g2.contains(p.centroid(), true));
  CHECK_FALSE(g2.contains({Rat(3, 2), 0}, false));
}

TEST_CASE("mirror") {
  auto m = mirror(a2_triangle());
  CHECK(is_positively_convex(m.V));
  bool found = false;
  for (const auto& v : m.V) found = found || v == RatPoint{1, 0};
  CHECK(found);
  auto back = mirror(m);
  for (const auto& v : a2_triangle().V) {
    bool hit = false;
    for (const auto& w : back.V) hit = hit || v == w;
    CHECK(hit);
  }
  auto d = realize(make_quiver({Family::D, 6}, "+-+-+"));
  CHECK(is_stable(mirror(d)).stable);
}

TEST_CASE("rational rotation") {
  auto p = a2_triangle();
  auto same = rotate_rational(p, 0);
  CHECK(same.V == p.V);
  auto r = rotate_rational(validate_relations({Family::A, 2}, {{1, 0}, {0, 1}, {-1, -1}}), 1);
  CHECK(r.V[0] == RatPoint{0, 1});
  auto d = realize(make_quiver({Family::D, 4}, "+++"));
  CHECK(is_stable(rotate_rational(d, Rat(1, 50))).stable);
}
