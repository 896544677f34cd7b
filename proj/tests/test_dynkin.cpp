#include "doctest.h"

#include <algorithm>

#include "stablegon/dynkin.hpp"

using namespace sgon;

TEST_CASE("Coxeter numbers and root counts") {
  CHECK(coxeter_number({Family::A, 5}) == 6);
  CHECK(coxeter_number({Family::D, 6}) == 10);
  CHECK(coxeter_number({Family::E, 8}) == 30);
  CHECK(num_positive_roots({Family::A, 5}) == 15);
  CHECK(positive_roots({Family::A, 5}).size() == 15);
  CHECK(positive_roots({Family::D, 4}).size() == 12);
  CHECK(positive_roots({Family::E, 6}).size() == 36);
  CHECK(positive_roots({Family::E, 7}).size() == 63);
  CHECK(positive_roots({Family::E, 8}).size() == 120);
  auto a2 = positive_roots({Family::A, 2});
  std::sort(a2.begin(), a2.end());
  CHECK(a2 == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("invalid types") {
  CHECK_THROWS(validate_type({Family::D, 3}));
  CHECK_THROWS(validate_type({Family::E, 9}));
  CHECK_THROWS(validate_type({Family::A, 0}));
}

TEST_CASE("E8 highest root") {
  auto r = positive_roots({Family::E, 8});
  int best = 0;
  for (const auto& d : r) best = std::max(best, total_dim(d));
  CHECK(best == 29);
}

TEST_CASE("Euler and skew forms on A2") {
  auto q = make_quiver({Family::A, 2}, "+");
  CHECK(euler_form(q, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(q, {0, 1}, {1, 0}) == 0);
  CHECK(euler_form(q, {1, 0}, {1, 0}) == 1);
  CHECK(lambda_form(q, 1, 2) == 1);
  CHECK(lambda_form(q, 2, 1) == -1);
  CHECK(lambda_form(q, 1, 1) == 0);
  for (const auto& q3 : all_orientations({Family::A, 3})) CHECK(lambda_form(q3, 1, 3) == 0);
}

TEST_CASE("orientations") {
  CHECK(all_orientations({Family::A, 6}).size() == 32);
  CHECK(all_orientations({Family::E, 8}).size() == 128);
  auto q = make_quiver({Family::D, 5}, "-+--");
  auto arrows = q.arrows();
  std::sort(arrows.begin(), arrows.end());
  CHECK(arrows == std::vector<Arrow>{{2, 1}, {2, 3}, {4, 3}, {5, 3}});
  CHECK(q.opposite().opposite() == q);
  CHECK(quiver_from_arrows(q.type, arrows) == q);
  CHECK_THROWS_AS(quiver_from_arrows(q.type, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}), std::invalid_argument);
  CHECK_THROWS(make_quiver({Family::A, 3}, "+"));
}

TEST_CASE("E edge order") {
  auto e = diagram_edges({Family::E, 6});
  REQUIRE(e.size() == 5);
  CHECK(e[0] == std::pair<int, int>{1, 2});
  CHECK(e[1] == std::pair<int, int>{2, 4});
  CHECK(e[2] == std::pair<int, int>{3, 4});
  CHECK(e[3] == std::pair<int, int>{4, 5});
}
