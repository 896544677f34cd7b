#include "stablegon/geometry.hpp"

namespace sgon {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  size_t slash = s.find('/');
  auto check_int = [&](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) throw std::invalid_argument("bad rational: " + s);
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational: " + s);
  };
  Rat r;
  if (slash == std::string::npos) {
    check_int(s);
    r = Rat(mpz_class(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    r = Rat(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    r.canonicalize();
  }
  return r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

Order cmp_points(const RatPoint& p, const RatPoint& q) {
  int c = cmp(p.y, q.y);
  if (c == 0) c = cmp(p.x, q.x);
  return c < 0 ? Order::Less : (c > 0 ? Order::Greater : Order::Equal);
}

namespace {

// 0: [0,pi/2) on positive x axis incl., 1: [pi/2,pi), 2: [pi,3pi/2), 3: [3pi/2,2pi)
int quadrant(const RatVec& v) {
  int sx = sgn(v.dx), sy = sgn(v.dy);
  if (sx > 0 && sy >= 0) return 0;
  if (sx <= 0 && sy > 0) return 1;
  if (sx < 0 && sy <= 0) return 2;
  return 3;
}

}  // namespace

Order cmp_arg(const RatVec& u, const RatVec& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("cmp_arg: zero vector");
  int qu = quadrant(u), qv = quadrant(v);
  if (qu != qv) return qu < qv ? Order::Less : Order::Greater;
  int c = sgn(cross(u, v));
  if (c > 0) return Order::Less;
  if (c < 0) return Order::Greater;
  return Order::Equal;
}

bool is_upward(const RatVec& v) {
  int sy = sgn(v.dy);
  return sy > 0 || (sy == 0 && sgn(v.dx) > 0);
}

RatVec upward(const RatVec& v) {
  if (v.is_zero()) throw std::invalid_argument("upward: zero vector");
  return is_upward(v) ? v : -v;
}

DirectedSegment upward(const DirectedSegment& seg) {
  Order o = cmp_points(seg.tail, seg.head);
  if (o == Order::Equal) throw std::invalid_argument("upward: degenerate segment");
  if (o == Order::Less) return seg;
  return {seg.head, seg.tail};
}

Side side_of(const RatPoint& a, const RatPoint& b, const RatPoint& p) {
  if (a == b) throw std::invalid_argument("side_of: a == b");
  int c = sgn(cross(b - a, p - a));
  return c > 0 ? Side::Left : (c < 0 ? Side::Right : Side::On);
}

bool is_positively_convex(const std::vector<RatPoint>& cycle) {
  size_t m = cycle.size();
  if (m < 3) return false;
  for (size_t i = 0; i < m; ++i)
    if (cycle[i] == cycle[(i + 1) % m]) return false;
  for (size_t i = 0; i < m; ++i) {
    const RatPoint& a = cycle[i];
    const RatPoint& b = cycle[(i + 1) % m];
    RatVec e = b - a;
    for (size_t k = 0; k < m; ++k) {
      if (k == i || k == (i + 1) % m) continue;
      if (sgn(cross(e, cycle[k] - a)) <= 0) return false;
    }
  }
  return true;
}

bool point_in_convex(const RatPoint& p, const std::vector<RatPoint>& hull, bool strict) {
  if (!is_positively_convex(hull)) throw std::invalid_argument("point_in_convex: invalid hull");
  size_t m = hull.size();
  for (size_t i = 0; i < m; ++i) {
    int c = sgn(cross(hull[(i + 1) % m] - hull[i], p - hull[i]));
    if (c < 0 || (strict && c == 0)) return false;
  }
  return true;
}

}  // namespace sgon
