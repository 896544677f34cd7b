#include "stablegon/qseries.hpp"

#include <algorithm>

namespace sgon {

namespace {

using Poly = std::vector<Rat>;  // ascending, no trailing zeros

void strip(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  strip(r);
  return r;
}

// a = q b + r
void poly_divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  Rat lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rat f = a.back() / lead;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    strip(a);
  }
  strip(q);
  r = a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  Rat lead = a.back();
  for (auto& x : a) x /= lead;
  return a;
}

std::string coef_term(const Rat& a, int k, const std::string& var, bool first) {
  std::string out;
  Rat m = a;
  if (sgn(m) < 0) {
    out += first ? "-" : " - ";
    m = -m;
  } else if (!first) {
    out += " + ";
  }
  bool unit = m == 1;
  if (k == 0) return out + format_rat(m);
  if (!unit) out += format_rat(m) + "*";
  out += var;
  if (k != 1) out += "^" + std::to_string(k);
  return out;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int k, const Rat& a) {
  LaurentPoly p;
  p.low = k;
  p.c = {a};
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  strip(c);
  size_t z = 0;
  while (z < c.size() && sgn(c[z]) == 0) ++z;
  if (z) {
    c.erase(c.begin(), c.begin() + (long)z);
    low += (int)z;
  }
  if (c.empty()) low = 0;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (int i = (int)c.size() - 1; i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    out += coef_term(c[i], low + i, var, first);
    first = false;
  }
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly r;
  r.low = std::min(a.low, b.low);
  int hi = std::max(a.high(), b.high());
  r.c.assign(hi - r.low + 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[a.low - r.low + i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[b.low - r.low + i] += b.c[i];
  r.trim();
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly nb = b;
  for (auto& x : nb.c) x = -x;
  return a + nb;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low = a.low + b.low;
  r.c = poly_mul(a.c, b.c);
  r.trim();
  return r;
}

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  if (n.is_zero()) {
    den = LaurentPoly::monomial(0);
    return;
  }
  int shift = n.low - d.low;
  Poly p = n.c, r = d.c;
  Poly g = poly_gcd(p, r);
  if (g.size() > 1) {
    Poly q, rem;
    poly_divmod(p, g, q, rem);
    p = q;
    poly_divmod(r, g, q, rem);
    r = q;
  }
  Rat lead = r.back();
  for (auto& x : p) x /= lead;
  for (auto& x : r) x /= lead;
  num.low = shift;
  num.c = p;
  num.trim();
  den.low = 0;
  den.c = r;
  den.trim();
}

RatFunc RatFunc::constant(const Rat& a) { return RatFunc(LaurentPoly::monomial(0, a), LaurentPoly::monomial(0)); }

std::string RatFunc::str(const std::string& var) const {
  if (den == LaurentPoly::monomial(0)) return num.str(var);
  return "(" + num.str(var) + ")/(" + den.str(var) + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
  return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num * b.num, a.den * b.den);
}

RatFunc operator*(const RatFunc& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num * b, a.den);
}

QSeries QSeries::one(const DynkinQuiver& q, int order) {
  QSeries s;
  int n = q.rank();
  s.lambda.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.lambda[i][j] = lambda_form(q, i + 1, j + 1);
  s.order = order;
  s.terms[DimVector(n, 0)] = RatFunc::constant(1);
  return s;
}

int QSeries::twist(const DimVector& a, const DimVector& b) const {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * lambda[i][j];
  }
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.lambda != b.lambda) throw std::invalid_argument("series over different quivers");
  QSeries r;
  r.lambda = a.lambda;
  r.order = std::min(a.order, b.order);
  for (const auto& [al, ca] : a.terms) {
    int na = total_dim(al);
    for (const auto& [be, cb] : b.terms) {
      if (na + total_dim(be) > r.order) continue;
      DimVector s(al.size());
      for (size_t i = 0; i < s.size(); ++i) s[i] = al[i] + be[i];
      RatFunc term = ca * cb * LaurentPoly::monomial(a.twist(al, be));
      auto it = r.terms.find(s);
      if (it == r.terms.end())
        r.terms.emplace(s, term);
      else
        it->second = it->second + term;
    }
  }
  for (auto it = r.terms.begin(); it != r.terms.end();)
    it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
  return r;
}

RatFunc qdilog_coefficient(int j) {
  LaurentPoly den = LaurentPoly::monomial(0);
  for (int k = 0; k < j; ++k) den = den * (LaurentPoly::monomial(2 * j) - LaurentPoly::monomial(2 * k));
  return RatFunc(LaurentPoly::monomial(j * j), den);
}

QSeries qdilog(const DynkinQuiver& q, const DimVector& alpha, int order) {
  int size = total_dim(alpha);
  if (size == 0) throw std::invalid_argument("qdilog of the zero class");
  QSeries s = QSeries::one(q, order);
  for (int j = 1; j * size <= order; ++j) {
    DimVector d(alpha.size());
    for (size_t i = 0; i < d.size(); ++i) d[i] = j * alpha[i];
    s.terms[d] = qdilog_coefficient(j);
  }
  return s;
}

std::vector<DimVector> phase_order(const StabilityFunction& z, std::vector<DimVector> stable) {
  for (const auto& d : stable) {
    RatVec v = z.charge(d);
    if (v == RatVec{0, 0} || !is_upward(v))
      throw std::invalid_argument("charge of " + dim_string(d) + " is not in the upper half-plane");
  }
  std::stable_sort(stable.begin(), stable.end(),
                   [&](const DimVector& a, const DimVector& b) { return z.cmp_phase(a, b) == Order::Greater; });
  for (size_t i = 1; i < stable.size(); ++i)
    if (z.cmp_phase(stable[i - 1], stable[i]) == Order::Equal)
      throw NonDiscrete("equal phases for " + dim_string(stable[i - 1]) + " and " + dim_string(stable[i]));
  return stable;
}

QSeries dt_product(const DynkinQuiver& q, const StabilityFunction& z, const std::vector<DimVector>& stable,
                   int order) {
  QSeries s = QSeries::one(q, order);
  for (const auto& d : phase_order(z, stable)) s = qdilog(q, d, order) * s;
  return s;
}

QSeries dt_product(const DynkinQuiver& q, const StabilityFunction& z, int order) {
  return dt_product(q, z, positive_roots(q.type), order);
}

StabilityFunction separate_phases(const StabilityFunction& z, const std::vector<DimVector>& classes) {
  static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67};
  auto discrete = [&](const StabilityFunction& w) {
    try {
      phase_order(w, classes);
      return true;
    } catch (const NonDiscrete&) {
      return false;
    }
  };
  if (discrete(z)) return z;
  for (int k = 20; k <= 60; k += 4) {
    StabilityFunction w = z;
    Rat eps(1, 1);
    eps /= mpz_class(1) << k;
    for (size_t i = 0; i < w.Z.size(); ++i)
      w.Z[i] = w.Z[i] + eps * RatVec{Rat(1, primes[i % 18]), Rat(1, primes[(i + 9) % 18] * (int)(i + 1))};
    if (discrete(w)) return w;
  }
  throw NonDiscrete("no small perturbation separates the phases");
}

StabilityFunction source_order_charges(const DynkinQuiver& q) {
  int n = q.rank();
  std::vector<int> depth(n + 1, 0);
  auto arrows = q.arrows();
  for (int pass = 0; pass < n; ++pass)
    for (const Arrow& a : arrows) depth[a.dst] = std::max(depth[a.dst], depth[a.src] + 1);
  StabilityFunction z;
  for (int v = 1; v <= n; ++v) z.Z.push_back({Rat(-(depth[v] * n + v - 1)), Rat(1)});
  return z;
}

WallCrossingResult wall_crossing_check(const DynkinQuiver& q, const StabilityFunction& z1,
                                       const std::vector<DimVector>& stable1, const StabilityFunction& z2,
                                       const std::vector<DimVector>& stable2, int order) {
  WallCrossingResult r;
  r.order1 = phase_order(z1, stable1);
  r.order2 = phase_order(z2, stable2);
  r.factors1 = (int)r.order1.size();
  r.factors2 = (int)r.order2.size();
  QSeries a = dt_product(q, z1, stable1, order);
  QSeries b = dt_product(q, z2, stable2, order);
  r.equal = a == b;
  if (!r.equal) {
    std::map<DimVector, std::pair<RatFunc, RatFunc>> all;
    for (const auto& [d, c] : a.terms) all[d].first = c;
    for (const auto& [d, c] : b.terms) all[d].second = c;
    for (const auto& [d, cc] : all)
      if (cc.first != cc.second) {
        r.first_difference = dim_string(d) + ": " + cc.first.str() + " vs " + cc.second.str();
        break;
      }
  }
  return r;
}

}  // namespace sgon
