#include "stablegon/polygon.hpp"

#include <map>
#include <mutex>

namespace sgon {

RatPoint StablePolygon::centroid() const {
  Rat sx = 0, sy = 0;
  for (const auto& p : V) {
    sx += p.x;
    sy += p.y;
  }
  return {sx / h(), sy / h()};
}

namespace {

void add_row(std::vector<std::vector<int>>& rows, int h, std::initializer_list<std::pair<int, int>> terms, int j) {
  std::vector<int> r(h, 0);
  for (auto [off, c] : terms) r[StablePolygon::wrap(j + off, h)] += c;
  rows.push_back(r);
}

std::string relation_name(const DynkinType& t, int row, int h) {
  int j = row % h, kind = row / h;
  if (t.rank == 6) return (kind == 0 ? "triangle relation j=" : "alternating relation j=") + std::to_string(j);
  if (t.rank == 7) return (kind == 0 ? "hexagon relation j=" : "central symmetry at j=") + std::to_string(j);
  const char* names[] = {"triangle relation j=", "pentagon relation j=", "central symmetry at j="};
  return names[kind] + std::to_string(j);
}

}  // namespace

std::vector<std::vector<int>> edge_relations(const DynkinType& t) {
  std::vector<std::vector<int>> rows;
  if (t.family != Family::E) return rows;
  int h = coxeter_number(t);
  if (t.rank == 6) {
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {4, 1}, {8, 1}}, j);
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {-3, -1}, {-6, 1}, {-9, -1}}, j);
  } else if (t.rank == 7) {
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {1, 1}, {6, 1}, {7, 1}, {12, 1}, {13, 1}}, j);
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {9, 1}}, j);
  } else {
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {10, 1}, {20, 1}}, j);
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {6, 1}, {12, 1}, {18, 1}, {24, 1}}, j);
    for (int j = 0; j < h; ++j) add_row(rows, h, {{0, 1}, {15, 1}}, j);
  }
  return rows;
}

StablePolygon validate_relations(const DynkinType& t, std::vector<RatPoint> vertices,
                                 std::vector<RatPoint> punctures) {
  try {
    validate_type(t);
  } catch (const std::invalid_argument& e) {
    throw PolygonError(e.what());
  }
  int h = coxeter_number(t);
  if ((int)vertices.size() != h)
    throw PolygonError("wrong vertex count: expected " + std::to_string(h) + ", got " +
                       std::to_string(vertices.size()));
  StablePolygon p;
  p.type = t;
  p.V = std::move(vertices);
  for (int j = 0; j < h; ++j)
    if (p.z(j).is_zero()) throw PolygonError("zero edge z_" + std::to_string(j));
  if (t.family == Family::D) {
    if (punctures.size() != 2) throw PolygonError("type D needs two punctures");
    p.B = std::move(punctures);
  } else if (!punctures.empty()) {
    throw PolygonError("punctures are only allowed for type D");
  }
  if (t.family == Family::D) {
    RatPoint o = p.centroid();
    for (int j = 0; j < h / 2; ++j) {
      RatPoint m{2 * o.x - p.V[j].x, 2 * o.y - p.V[j].y};
      if (m != p.v(j + h / 2)) throw PolygonError("central symmetry at j=" + std::to_string(j));
    }
    RatPoint m{2 * o.x - p.B[0].x, 2 * o.y - p.B[0].y};
    if (m != p.B[1]) throw PolygonError("central symmetry of punctures");
  }
  if (t.family == Family::E) {
    auto rows = edge_relations(t);
    for (size_t r = 0; r < rows.size(); ++r) {
      RatVec s{0, 0};
      for (int j = 0; j < h; ++j)
        if (rows[r][j]) s = s + Rat(rows[r][j]) * p.z(j);
      if (!s.is_zero()) throw PolygonError(relation_name(t, (int)r, h));
    }
  }
  derive_satellites(p);
  return p;
}

void derive_satellites(StablePolygon& p) {
  p.W.clear();
  p.U.clear();
  if (p.type.family != Family::E) return;
  int h = p.h();
  for (int j = 0; j < h; ++j) {
    RatPoint w, alt;
    if (p.type.rank == 6) {
      w = p.v(j) + p.z(j + 4);
      alt = p.v(j - 1) - p.z(j + 8);
    } else if (p.type.rank == 7) {
      w = p.v(j) + p.z(j + 5);
      alt = p.v(j) - p.z(j + 14);
    } else {
      w = p.v(j + 1) + p.z(j + 11);
      alt = p.v(j) - p.z(j + 21);
    }
    if (w != alt) throw PolygonError("inconsistent satellite W_" + std::to_string(j));
    p.W.push_back(w);
  }
  if (p.type.rank == 7) {
    for (int j = 0; j < h; ++j) {
      RatPoint u = p.w(j + 1) + p.z(j + 7);
      RatPoint alt = p.w(j - 1) - p.z(j + 12);
      if (u != alt) throw PolygonError("inconsistent satellite U_" + std::to_string(j));
      p.U.push_back(u);
    }
  }
}

int ConvexRegion::first_violation(const RatPoint& p, bool strict) const {
  for (size_t i = 0; i < sides.size(); ++i) {
    int c = sgn(cross(sides[i].b - sides[i].a, p - sides[i].a));
    if (c < 0 || (strict && c == 0)) return (int)i;
  }
  return -1;
}

bool ConvexRegion::contains(const RatPoint& p, bool strict) const { return first_violation(p, strict) < 0; }

ConvexRegion level_diagonal_gon(const StablePolygon& p, int s) {
  int h = p.h();
  if (s < 1 || 2 * s > h) throw PolygonError("level out of range");
  ConvexRegion r;
  for (int j = 0; j < h; ++j) r.sides.push_back({p.v(j), p.v(j + s)});
  return r;
}

int required_level(const DynkinType& t) {
  if (t.family == Family::D) return t.rank - 2;
  if (t.family == Family::E) return t.rank - 3;
  return 0;
}

StabilityReport is_stable(const StablePolygon& p) {
  StabilityReport rep;
  int h = p.h();
  if (h == 2) {
    rep.stable = p.V[0] != p.V[1];
    if (rep.stable)
      rep.certificate.push_back("bigon with distinct vertices");
    else {
      rep.clause = "positively convex";
      rep.failure = "degenerate bigon";
    }
    return rep;
  }
  for (int j = 0; j < h; ++j) {
    RatVec e = p.v(j + 1) - p.v(j);
    for (int k = 0; k < h; ++k) {
      if (k == j || k == StablePolygon::wrap(j + 1, h)) continue;
      if (sgn(cross(e, p.V[k] - p.v(j))) <= 0) {
        rep.clause = "positively convex";
        rep.failure = "vertex V_" + std::to_string(k) + " not strictly left of edge V_" + std::to_string(j) +
                      "V_" + std::to_string(StablePolygon::wrap(j + 1, h));
        return rep;
      }
    }
  }
  rep.certificate.push_back("positively convex: all " + std::to_string(h) + " edges checked");
  int s = required_level(p.type);
  if (p.type.family == Family::D) {
    ConvexRegion g = level_diagonal_gon(p, s);
    const char* names[] = {"B_-", "B_+"};
    for (int i = 0; i < 2; ++i) {
      int bad = g.first_violation(p.B[i], true);
      if (bad >= 0) {
        rep.clause = "punctures inside level-(n-2) diagonal-gon";
        rep.failure = std::string("puncture ") + names[i] + " not strictly inside level-" + std::to_string(s) +
                      " diagonal-gon (line V_" + std::to_string(bad) + "V_" + std::to_string((bad + s) % h) + ")";
        return rep;
      }
      rep.certificate.push_back(std::string(names[i]) + " strictly inside level-" + std::to_string(s) +
                                " diagonal-gon");
    }
  } else if (p.type.family == Family::E) {
    ConvexRegion g = level_diagonal_gon(p, s);
    for (int j = 0; j < h; ++j) {
      int bad = g.first_violation(p.W[j], true);
      if (bad >= 0) {
        rep.clause = "W_j inside level-(n-3) diagonal-gon";
        rep.failure = "W_" + std::to_string(j) + " not strictly inside level-" + std::to_string(s) +
                      " diagonal-gon (line V_" + std::to_string(bad) + "V_" + std::to_string((bad + s) % h) + ")";
        return rep;
      }
    }
    rep.certificate.push_back("all " + std::to_string(h) + " satellites W_j strictly inside level-" +
                              std::to_string(s) + " diagonal-gon");
  }
  rep.stable = true;
  return rep;
}

StablePolygon mirror(const StablePolygon& p) {
  int h = p.h();
  std::vector<RatPoint> v(h);
  for (int j = 0; j < h; ++j) {
    const RatPoint& q = p.v(-j);
    v[j] = {-q.x, q.y};
  }
  std::vector<RatPoint> b;
  if (p.B.size() == 2) b = {{-p.B[1].x, p.B[1].y}, {-p.B[0].x, p.B[0].y}};
  return validate_relations(p.type, v, b);
}

StablePolygon rotate_rational(const StablePolygon& p, const Rat& t) {
  Rat d = 1 + t * t;
  Rat c = (1 - t * t) / d, s = 2 * t / d;
  auto rot = [&](const RatPoint& q) { return RatPoint{c * q.x - s * q.y, s * q.x + c * q.y}; };
  std::vector<RatPoint> v, b;
  for (const auto& q : p.V) v.push_back(rot(q));
  for (const auto& q : p.B) b.push_back(rot(q));
  return validate_relations(p.type, v, b);
}

StablePolygon translate(const StablePolygon& p, const RatVec& d) {
  std::vector<RatPoint> v, b;
  for (const auto& q : p.V) v.push_back(q + d);
  for (const auto& q : p.B) b.push_back(q + d);
  return validate_relations(p.type, v, b);
}

namespace {

FormalModel build_formal(const DynkinType& t) {
  int h = coxeter_number(t), n = t.rank;
  auto rows = edge_relations(t);
  std::vector<std::vector<Rat>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  m.emplace_back(h, Rat(1));
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int c = 0; c < h && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c];
      for (int k = 0; k < h; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  FormalModel fm;
  fm.h = h;
  fm.n = n;
  std::vector<bool> is_pivot(h, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int c = 0; c < h; ++c)
    if (!is_pivot[c]) fm.free_index.push_back(c);
  if ((int)fm.free_index.size() != n)
    throw std::logic_error("relation nullspace has dimension " + std::to_string(fm.free_index.size()));
  fm.z.assign(h, std::vector<Rat>(n, Rat(0)));
  for (int k = 0; k < n; ++k) {
    int f = fm.free_index[k];
    fm.z[f][k] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) fm.z[pivot_col[r]][k] = -m[r][f];
  }
  fm.V.assign(h, std::vector<Rat>(n, Rat(0)));
  for (int j = 1; j < h; ++j)
    for (int k = 0; k < n; ++k) fm.V[j][k] = fm.V[j - 1][k] + fm.z[j][k];
  for (int k = 0; k < n; ++k) {
    Rat mean = 0;
    for (int j = 0; j < h; ++j) mean += fm.V[j][k];
    mean /= h;
    for (int j = 0; j < h; ++j) fm.V[j][k] -= mean;
  }
  auto w = [&](int j) { return StablePolygon::wrap(j, h); };
  fm.W.assign(h, std::vector<Rat>(n));
  for (int j = 0; j < h; ++j)
    for (int k = 0; k < n; ++k) {
      if (n == 6)
        fm.W[j][k] = fm.V[j][k] + fm.z[w(j + 4)][k];
      else if (n == 7)
        fm.W[j][k] = fm.V[j][k] + fm.z[w(j + 5)][k];
      else
        fm.W[j][k] = fm.V[w(j + 1)][k] + fm.z[w(j + 11)][k];
    }
  return fm;
}

}  // namespace

const FormalModel& e_formal_model(const DynkinType& t) {
  static std::mutex mu;
  static std::map<int, FormalModel> cache;
  if (t.family != Family::E) throw std::invalid_argument("formal model is defined for E types only");
  validate_type(t);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.rank);
  if (it == cache.end()) it = cache.emplace(t.rank, build_formal(t)).first;
  return it->second;
}

}  // namespace sgon
