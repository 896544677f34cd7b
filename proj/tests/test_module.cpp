#include "doctest.h"

#include <algorithm>

#include "stablegon/module.hpp"
#include "stablegon/realize.hpp"

using namespace sgon;

namespace {

DynkinQuiver a2() { return make_quiver({Family::A, 2}, "+"); }

}  // namespace

TEST_CASE("A2 indecomposables") {
  auto ind = indecomposables(a2());
  REQUIRE(ind.size() == 3);
  const auto& p = ind.at({1, 1});
  REQUIRE(p.mats.size() == 1);
  CHECK(p.mats[0].size() == 1);
  CHECK(sgn(p.mats[0][0][0]) != 0);
  CHECK(ind.at({1, 0}).dim == DimVector{1, 0});
}

TEST_CASE("Gabriel bijection and rigidity") {
  for (auto t : {DynkinType{Family::D, 4}, DynkinType{Family::A, 5}, DynkinType{Family::E, 6}}) {
    for (const auto& q : {all_orientations(t).front(), all_orientations(t).back()}) {
      auto ind = indecomposables(q);
      std::vector<DimVector> got;
      for (const auto& [d, m] : ind) {
        got.push_back(d);
        CHECK(hom_dim(m, m) == 1);
      }
      auto roots = positive_roots(t);
      std::sort(roots.begin(), roots.end());
      CHECK(got == roots);
    }
  }
  CHECK(indecomposables(make_quiver({Family::D, 4}, "+-+")).size() == 12);
}

TEST_CASE("reflection functors from sources agree") {
  auto q = make_quiver({Family::D, 5}, "+-+-");
  auto a = indecomposables(q, true);
  auto b = indecomposables(q, false);
  REQUIRE(a.size() == b.size());
  for (const auto& [d, m] : a) CHECK(hom_dim(m, b.at(d)) == 1);
}

TEST_CASE("A2 hom spaces") {
  auto ind = indecomposables(a2());
  const auto& s1 = ind.at({1, 0});
  const auto& s2 = ind.at({0, 1});
  const auto& p1 = ind.at({1, 1});
  CHECK(hom_dim(p1, s1) == 1);
  CHECK(hom_dim(s1, p1) == 0);
  CHECK(hom_dim(s2, p1) == 1);
  CHECK(hom_dim_mod_p(p1, s1) == 1);
}

TEST_CASE("Euler identity") {
  auto q = make_quiver({Family::A, 4}, "+-+");
  auto ind = indecomposables(q);
  for (const auto& [d, m] : ind)
    for (const auto& [e, n] : ind) CHECK(hom_dim(m, n) - ext1_dim(m, n) == euler_form(q, d, e));
  auto sa = indecomposables(a2());
  CHECK(ext1_dim(sa.at({1, 0}), sa.at({0, 1})) == 1);
  CHECK(ext1_dim(sa.at({0, 1}), sa.at({1, 0})) == 0);
  CHECK(ext1_dim(sa.at({1, 0}), sa.at({1, 0})) == 0);
}

TEST_CASE("embeddings") {
  auto ind = indecomposables(a2());
  const auto& s1 = ind.at({1, 0});
  const auto& s2 = ind.at({0, 1});
  const auto& p1 = ind.at({1, 1});
  auto r = embeds(s2, p1);
  CHECK(r.embeds);
  REQUIRE(r.certificate.has_value());
  CHECK(is_hom(s2, p1, *r.certificate));
  CHECK(is_injective(s2, p1, *r.certificate));
  CHECK_FALSE(embeds(s1, p1).embeds);
  CHECK(embeds(p1, p1).embeds);
}

TEST_CASE("total stability on A2") {
  auto q = a2();
  auto good = check_total_stability(q, StabilityFunction{{{-1, 1}, {1, 1}}});
  CHECK(good.verdict);
  auto bad = check_total_stability(q, StabilityFunction{{{1, 1}, {-1, 1}}});
  CHECK_FALSE(bad.verdict);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->sub == DimVector{0, 1});
  CHECK(bad.counterexample->root == DimVector{1, 1});
  REQUIRE(bad.counterexample_map.has_value());
  auto ind = indecomposables(q);
  CHECK(is_injective(ind.at({0, 1}), ind.at({1, 1}), *bad.counterexample_map));
}

TEST_CASE("zigzag hexagon is totally stable") {
  auto p = validate_relations({Family::A, 5}, {{-1, 0}, {1, 0}, {3, 3}, {Rat(7, 2), 7}, {-1, 10}, {-4, 5}});
  auto a = stability_function(p);
  auto q = quiver_from_arrows({Family::A, 5}, {{2, 1}, {3, 2}, {3, 4}, {5, 4}});
  CHECK(realized_quiver(a) == q);
  CHECK(check_total_stability(q, a.Z).verdict);
  CHECK(ext_quiver_check(q, a.quiver).ok);
}

TEST_CASE("Ext quiver mismatch is reported") {
  auto p = realize(make_quiver({Family::A, 3}, "++"));
  auto a = stability_function(p);
  auto r = ext_quiver_check(make_quiver({Family::A, 3}, "+-"), a.quiver);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.mismatches.empty());
}
