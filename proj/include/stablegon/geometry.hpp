#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace sgon {

using Rat = mpq_class;

// "p/q" or "p"; throws std::invalid_argument on malformed input
Rat parse_rat(const std::string& s);
std::string format_rat(const Rat& r);
double to_double(const Rat& r);

struct RatVec {
  Rat dx, dy;
  bool is_zero() const { return sgn(dx) == 0 && sgn(dy) == 0; }
};

struct RatPoint {
  Rat x, y;
};

inline bool operator==(const RatVec& a, const RatVec& b) { return a.dx == b.dx && a.dy == b.dy; }
inline bool operator!=(const RatVec& a, const RatVec& b) { return !(a == b); }
inline bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(const RatPoint& a, const RatPoint& b) { return !(a == b); }

inline RatVec operator-(const RatPoint& a, const RatPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline RatPoint operator+(const RatPoint& a, const RatVec& v) { return {a.x + v.dx, a.y + v.dy}; }
inline RatPoint operator-(const RatPoint& a, const RatVec& v) { return {a.x - v.dx, a.y - v.dy}; }
inline RatVec operator+(const RatVec& a, const RatVec& b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline RatVec operator-(const RatVec& a, const RatVec& b) { return {a.dx - b.dx, a.dy - b.dy}; }
inline RatVec operator-(const RatVec& a) { return {-a.dx, -a.dy}; }
inline RatVec operator*(const Rat& s, const RatVec& a) { return {s * a.dx, s * a.dy}; }

inline Rat cross(const RatVec& a, const RatVec& b) { return a.dx * b.dy - a.dy * b.dx; }
inline Rat dot(const RatVec& a, const RatVec& b) { return a.dx * b.dx + a.dy * b.dy; }

enum class Order { Less, Equal, Greater };
enum class Side { Left, On, Right };

struct DirectedSegment {
  RatPoint tail, head;
  RatVec vec() const { return head - tail; }
};

// y first, then x
Order cmp_points(const RatPoint& p, const RatPoint& q);
inline bool point_less(const RatPoint& p, const RatPoint& q) { return cmp_points(p, q) == Order::Less; }

// arg in [0, 2pi), exact; throws on zero vectors
Order cmp_arg(const RatVec& u, const RatVec& v);

// arg(v) in [0, pi)
bool is_upward(const RatVec& v);
RatVec upward(const RatVec& v);
DirectedSegment upward(const DirectedSegment& seg);

Side side_of(const RatPoint& a, const RatPoint& b, const RatPoint& p);

bool is_positively_convex(const std::vector<RatPoint>& cycle);
bool point_in_convex(const RatPoint& p, const std::vector<RatPoint>& hull, bool strict);

}  // namespace sgon
