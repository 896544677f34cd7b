#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablegon/diagonals.hpp"
#include "stablegon/dynkin.hpp"
#include "stablegon/geometry.hpp"

namespace sgon {

// sum c[i] t^(low + i), t = q^(1/2); trimmed so both ends are nonzero
struct LaurentPoly {
  int low = 0;
  std::vector<Rat> c;

  static LaurentPoly monomial(int k, const Rat& a = 1);
  bool is_zero() const { return c.empty(); }
  int high() const { return low + (int)c.size() - 1; }
  void trim();
  std::string str(const std::string& var = "t") const;
  bool operator==(const LaurentPoly& o) const { return low == o.low && c == o.c; }
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// num/den reduced: den is a polynomial with nonzero constant term and leading coefficient 1
struct RatFunc {
  LaurentPoly num, den;

  RatFunc() : den(LaurentPoly::monomial(0)) {}
  RatFunc(const LaurentPoly& n, const LaurentPoly& d);
  static RatFunc constant(const Rat& a);
  bool is_zero() const { return num.is_zero(); }
  std::string str(const std::string& var = "t") const;
  bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const LaurentPoly& b);

struct NonDiscrete : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// truncated quantum affine space: y^a y^b = t^lambda(a,b) y^(a+b), terms with |a| <= order
struct QSeries {
  std::vector<std::vector<int>> lambda;  // lambda[i][j] for simples i, j (0-based)
  int order = 0;
  std::map<DimVector, RatFunc> terms;

  static QSeries one(const DynkinQuiver& q, int order);
  int twist(const DimVector& a, const DimVector& b) const;
  bool operator==(const QSeries& o) const { return order == o.order && terms == o.terms; }
};

QSeries operator*(const QSeries& a, const QSeries& b);

// sum_j t^(j^2) / prod_{k<j} (t^(2j) - t^(2k)) y^(j alpha)
QSeries qdilog(const DynkinQuiver& q, const DimVector& alpha, int order);
RatFunc qdilog_coefficient(int j);

// decreasing phase; throws NonDiscrete naming a tied pair
std::vector<DimVector> phase_order(const StabilityFunction& z, std::vector<DimVector> stable);

// factors in decreasing phase, multiplied right to left (highest phase rightmost)
QSeries dt_product(const DynkinQuiver& q, const StabilityFunction& z, const std::vector<DimVector>& stable, int order);
// every positive root taken as stable
QSeries dt_product(const DynkinQuiver& q, const StabilityFunction& z, int order);

// z itself if discrete on classes, otherwise z + eps * (fixed generic offsets) for the largest eps = 2^-k that separates
StabilityFunction separate_phases(const StabilityFunction& z, const std::vector<DimVector>& classes);

// simple charges whose phases increase along every arrow: only the simples are stable
StabilityFunction source_order_charges(const DynkinQuiver& q);

struct WallCrossingResult {
  bool equal = false;
  int factors1 = 0, factors2 = 0;
  std::vector<DimVector> order1, order2;
  std::string first_difference;
};

WallCrossingResult wall_crossing_check(const DynkinQuiver& q, const StabilityFunction& z1,
                                       const std::vector<DimVector>& stable1, const StabilityFunction& z2,
                                       const std::vector<DimVector>& stable2, int order);

}  // namespace sgon
