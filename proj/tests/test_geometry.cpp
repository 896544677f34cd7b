#include "doctest.h"

#include "stablegon/geometry.hpp"

using namespace sgon;

TEST_CASE("rationals are canonical") {
  Rat a = parse_rat("6/-4");
  CHECK(a == Rat(-3, 2));
  CHECK(format_rat(a) == "-3/2");
  CHECK(format_rat(parse_rat("10/5")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("point order is y then x") {
  CHECK(cmp_points({0, -1}, {-1, 0}) == Order::Less);
  CHECK(cmp_points({-1, 0}, {1, 0}) == Order::Less);
  CHECK(cmp_points({3, 4}, {3, 4}) == Order::Equal);
}

TEST_CASE("argument order") {
  CHECK(cmp_arg({1, 0}, {0, 1}) == Order::Less);
  CHECK(cmp_arg({-1, 1}, {1, 1}) == Order::Greater);
  CHECK(cmp_arg({2, 3}, {4, 6}) == Order::Equal);
  CHECK(cmp_arg({1, -1}, {-1, 1}) == Order::Greater);
  CHECK_THROWS(cmp_arg({0, 0}, {1, 0}));
}

TEST_CASE("upward normalization") {
  auto s = upward(DirectedSegment{{0, 0}, {1, 1}});
  CHECK(s.head == RatPoint{1, 1});
  s = upward(DirectedSegment{{0, 0}, {-1, -1}});
  CHECK(s.tail == RatPoint{-1, -1});
  CHECK(s.head == RatPoint{0, 0});
  s = upward(DirectedSegment{{1, 0}, {0, 0}});
  CHECK(s.tail == RatPoint{0, 0});
  CHECK(is_upward({1, 0}));
  CHECK_FALSE(is_upward({-1, 0}));
}

TEST_CASE("side of a directed line") {
  CHECK(side_of({0, 0}, {1, 0}, {0, 1}) == Side::Left);
  CHECK(side_of({0, 0}, {1, 0}, {0, -1}) == Side::Right);
  CHECK(side_of({0, 0}, {1, 0}, {2, 0}) == Side::On);
}

TEST_CASE("positive convexity") {
  std::vector<RatPoint> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(is_positively_convex(sq));
  std::vector<RatPoint> cw(sq.rbegin(), sq.rend());
  CHECK_FALSE(is_positively_convex(cw));
  std::vector<RatPoint> mid{{0, 0}, {Rat(1, 2), 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_FALSE(is_positively_convex(mid));
  CHECK_FALSE(is_positively_convex({{0, 0}, {1, 0}}));
}

TEST_CASE("point in convex polygon") {
  std::vector<RatPoint> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(point_in_convex({Rat(1, 2), Rat(1, 2)}, sq, true));
  CHECK_FALSE(point_in_convex({1, Rat(1, 2)}, sq, true));
  CHECK(point_in_convex({1, Rat(1, 2)}, sq, false));
  CHECK_FALSE(point_in_convex({2, 2}, sq, false));
}
