#include "doctest.h"

#include "stablegon/realize.hpp"

using namespace sgon;

TEST_CASE("A2 constructor") {
  auto q = make_quiver({Family::A, 2}, "+");
  auto p = realize_A(q);
  CHECK(p.V.size() == 3);
  std::string why;
  CHECK(certifies(p, q, &why));
  CHECK_FALSE(certifies(p, q.opposite()));
}

TEST_CASE("A5 linear orientation") {
  auto q = make_quiver({Family::A, 5}, "++++");
  auto a = stability_function(realize_A(q));
  CHECK(realized_quiver(a) == q);
}

TEST_CASE("A1 bigon") {
  auto q = make_quiver({Family::A, 1}, "");
  auto p = realize(q);
  CHECK(p.h() == 2);
  auto a = stability_function(p);
  CHECK(a.phases.size() == 1);
  CHECK(a.quiver.arrows.empty());
}

TEST_CASE("D constructor cases") {
  auto q = make_quiver({Family::D, 4}, "+++");
  auto p = realize(q);
  CHECK(p.h() == 6);
  CHECK(p.B.size() == 2);
  CHECK(certifies(p, q));
  for (const auto& q5 : all_orientations({Family::D, 5})) CHECK(certifies(realize(q5), q5));
}

TEST_CASE("E relation nullspace has the rank as dimension") {
  CHECK(e_formal_model({Family::E, 6}).free_index.size() == 6);
  CHECK(e_formal_model({Family::E, 7}).free_index.size() == 7);
  CHECK(e_formal_model({Family::E, 8}).free_index.size() == 8);
}

TEST_CASE("E reference polygon passes relations") {
  for (int n : {6, 7, 8}) {
    auto p = e_reference_polygon({Family::E, n});
    CHECK_NOTHROW(validate_relations(p.type, p.V));
    CHECK_FALSE(misoriented_triangle(p).has_value());
  }
}

TEST_CASE("E6 orientations certify") {
  for (const auto& q : all_orientations({Family::E, 6})) {
    std::string why;
    auto p = realize(q);
    CHECK_MESSAGE(certifies(p, q, &why), q.sign_string() << " " << why);
  }
}

TEST_CASE("leaf deformation reverses one arrow") {
  auto q = make_quiver({Family::E, 6}, "-----");
  auto p = realize(q);
  for (int leaf : {1, 3, 6}) {
    for (int dir : {1, -1}) {
      StablePolygon d;
      try {
        d = deform_leaf(p, leaf, dir);
      } catch (const CannotDeform&) {
        continue;
      }
      auto q2 = realized_quiver(stability_function(d));
      int changed = 0;
      for (size_t i = 0; i < q.eps.size(); ++i) changed += q.eps[i] != q2.eps[i];
      CHECK(changed == 1);
      auto back = deform_leaf(d, leaf, -dir);
      CHECK(realized_quiver(stability_function(back)) == q);
    }
  }
}

TEST_CASE("search without the cache") {
  SearchConfig cfg;
  cfg.use_cache = false;
  auto q = make_quiver({Family::E, 6}, "+--+-");
  auto p = realize(q, cfg);
  CHECK(certifies(p, q));
}
