#include "doctest.h"

#include "stablegon/qseries.hpp"
#include "stablegon/realize.hpp"

using namespace sgon;

namespace {

DimVector e(int n, int i) {
  DimVector d(n, 0);
  d[i] = 1;
  return d;
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  auto a = LaurentPoly::monomial(2) - LaurentPoly::monomial(0);
  auto b = LaurentPoly::monomial(-1, 3);
  CHECK((a * b).str() == "3*t - 3*t^-1");
  CHECK((a - a).is_zero());
  RatFunc f(LaurentPoly::monomial(4) - LaurentPoly::monomial(0), LaurentPoly::monomial(2) - LaurentPoly::monomial(0));
  CHECK(f.str() == "t^2 + 1");
}

TEST_CASE("dilogarithm coefficients") {
  CHECK(qdilog_coefficient(1).str() == "(t)/(t^2 - 1)");
  RatFunc two(LaurentPoly::monomial(4),
              (LaurentPoly::monomial(4) - LaurentPoly::monomial(0)) * (LaurentPoly::monomial(4) - LaurentPoly::monomial(2)));
  CHECK(qdilog_coefficient(2) == two);
  auto q = make_quiver({Family::A, 2}, "+");
  auto s = qdilog(q, {1, 0}, 0);
  CHECK(s == QSeries::one(q, 0));
}

TEST_CASE("quantum torus twist") {
  auto q = make_quiver({Family::A, 2}, "+");
  auto y1 = qdilog(q, {1, 0}, 1);
  auto y2 = qdilog(q, {0, 1}, 1);
  auto a = (y1 * y2).order;
  CHECK(a == 1);
  QSeries x = QSeries::one(q, 2), y = QSeries::one(q, 2);
  x.terms[{1, 0}] = RatFunc::constant(1);
  y.terms[{0, 1}] = RatFunc::constant(1);
  auto xy = x * y, yx = y * x;
  CHECK(xy.terms.at({1, 1}).str() == "t");
  CHECK(yx.terms.at({1, 1}).str() == "t^-1");
}

TEST_CASE("phase order") {
  StabilityFunction z{{{-1, 1}, {1, 1}}};
  auto o = phase_order(z, {{0, 1}, {1, 1}, {1, 0}});
  CHECK(o == std::vector<DimVector>{{1, 0}, {1, 1}, {0, 1}});
  StabilityFunction tie{{{1, 1}, {1, 1}}};
  CHECK_THROWS_AS(phase_order(tie, {{1, 0}, {0, 1}}), NonDiscrete);
  StabilityFunction down{{{1, -1}, {1, 1}}};
  CHECK_THROWS_AS(phase_order(down, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("pentagon identity") {
  auto q = make_quiver({Family::A, 2}, "+");
  int N = 8;
  auto lhs = qdilog(q, {0, 1}, N) * qdilog(q, {1, 1}, N) * qdilog(q, {1, 0}, N);
  auto rhs = qdilog(q, {1, 0}, N) * qdilog(q, {0, 1}, N);
  CHECK(lhs == rhs);
  CHECK_FALSE(qdilog(q, {1, 0}, N) * qdilog(q, {1, 1}, N) * qdilog(q, {0, 1}, N) == rhs);
  auto w = wall_crossing_check(q, StabilityFunction{{{-1, 1}, {1, 1}}}, positive_roots(q.type), source_order_charges(q),
                               {e(2, 0), e(2, 1)}, N);
  CHECK(w.equal);
  CHECK(w.factors1 == 3);
  CHECK(w.factors2 == 2);
}

TEST_CASE("A3 linear wall crossing") {
  auto q = make_quiver({Family::A, 3}, "++");
  auto a = stability_function(realize(q));
  auto z = separate_phases(a.Z, positive_roots(q.type));
  auto w = wall_crossing_check(q, z, positive_roots(q.type), source_order_charges(q), {e(3, 0), e(3, 1), e(3, 2)}, 6);
  CHECK(w.equal);
  CHECK(w.factors1 == 6);
  CHECK(w.factors2 == 3);
}

TEST_CASE("perturbation keeps discrete charges") {
  StabilityFunction z{{{-1, 1}, {1, 1}}};
  auto w = separate_phases(z, positive_roots({Family::A, 2}));
  CHECK(w.Z == z.Z);
  StabilityFunction tie{{{0, 1}, {0, 1}}};
  auto s = separate_phases(tie, positive_roots({Family::A, 2}));
  CHECK_NOTHROW(phase_order(s, positive_roots({Family::A, 2})));
}

TEST_CASE("E6 factor count") {
  auto q = make_quiver({Family::E, 6}, "-----");
  auto a = stability_function(realize(q));
  auto z = separate_phases(a.Z, positive_roots(q.type));
  CHECK(phase_order(z, positive_roots(q.type)).size() == 36);
}
