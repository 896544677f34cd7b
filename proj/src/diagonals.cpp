#include "stablegon/diagonals.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace sgon {

std::string Endpoint::str() const {
  if (tag == '-') return "B-";
  if (tag == '+') return "B+";
  return std::string(1, tag) + std::to_string(idx);
}

RatPoint DiagonalModel::point(const Endpoint& e) const {
  switch (e.tag) {
    case 'V': return poly.v(e.idx);
    case 'W': return poly.w(e.idx);
    case '-': return poly.B.at(0);
    case '+': return poly.B.at(1);
  }
  throw DiagonalError("unknown endpoint tag");
}

namespace {

SymPair key(const Endpoint& a, const Endpoint& b) { return a < b ? SymPair{a, b} : SymPair{b, a}; }

struct UnionFind {
  std::map<SymPair, int> id;
  std::vector<int> parent;
  std::vector<SymPair> keys;
  int get(const SymPair& k) {
    auto it = id.find(k);
    if (it != id.end()) return it->second;
    int i = (int)parent.size();
    id[k] = i;
    parent.push_back(i);
    keys.push_back(k);
    return i;
  }
  int root(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void add(const Endpoint& a, const Endpoint& b) { get(key(a, b)); }
  void unite(const Endpoint& a, const Endpoint& b, const Endpoint& c, const Endpoint& d) {
    int x = root(get(key(a, b))), y = root(get(key(c, d)));
    if (x != y) parent[x] = y;
  }
};

Endpoint Vt(int j, int h) { return {'V', StablePolygon::wrap(j, h)}; }
Endpoint Wt(int j, int h) { return {'W', StablePolygon::wrap(j, h)}; }

void build_A(UnionFind& uf, int h) {
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) uf.add(Vt(i, h), Vt(j, h));
}

void build_D(UnionFind& uf, int h) {
  int H = h / 2;
  Endpoint bm{'-', 0}, bp{'+', 0};
  for (int j = 0; j < h; ++j) {
    for (int s = 1; s < H; ++s) uf.unite(Vt(j, h), Vt(j + s, h), Vt(j + s + H, h), Vt(j + H, h));
    uf.unite(Vt(j, h), bm, bp, Vt(j + H, h));
    uf.unite(Vt(j, h), bp, bm, Vt(j + H, h));
  }
}

void build_E(UnionFind& uf, int n, int h) {
  for (int j = 0; j < h; ++j) {
    for (int s = 1; s <= n - 3; ++s) uf.add(Vt(j, h), Vt(j + s, h));
    uf.add(Wt(j, h), Wt(j + 2, h));
    uf.unite(Vt(j - 1, h), Wt(j + 2, h), Wt(j + 1, h), Vt(j + n - 3, h));
    uf.unite(Vt(j - 1, h), Wt(j + 1, h), Wt(j + 2, h), Vt(j + n - 3, h));
    uf.unite(Vt(j - 1, h), Vt(j, h), Wt(j + 4, h), Vt(j + n - 3, h));
    uf.unite(Vt(j - 1, h), Vt(j, h), Vt(j + 2 - n, h), Wt(j + 2 - n, h));
    if (n == 7) {
      uf.unite(Wt(j, h), Wt(j + 2, h), Wt(j + 8, h), Vt(j + 7, h));
      uf.unite(Wt(j, h), Wt(j + 2, h), Vt(j - 5, h), Wt(j - 6, h));
    } else if (n == 8) {
      uf.unite(Wt(j, h), Wt(j + 2, h), Wt(j + 14, h), Vt(j + 13, h));
      uf.unite(Wt(j, h), Wt(j + 2, h), Vt(j - 10, h), Wt(j - 12, h));
    }
  }
  if (n == 7 || n == 8) {
    int H = h / 2;
    std::vector<SymPair> ks = uf.keys;
    for (const auto& k : ks) {
      Endpoint a{k.first.tag, StablePolygon::wrap(k.first.idx + H, h)};
      Endpoint b{k.second.tag, StablePolygon::wrap(k.second.idx + H, h)};
      uf.unite(k.first, k.second, a, b);
    }
  }
}

std::vector<Rat> formal_point(const FormalModel& fm, const Endpoint& e) {
  return e.tag == 'V' ? fm.V[e.idx] : fm.W[e.idx];
}

std::vector<Rat> formal_diff(const FormalModel& fm, const Endpoint& a, const Endpoint& b) {
  auto pa = formal_point(fm, a), pb = formal_point(fm, b);
  for (size_t i = 0; i < pa.size(); ++i) pb[i] -= pa[i];
  return pb;
}

// sign-normalized: first nonzero coefficient positive
std::vector<Rat> sign_normal(std::vector<Rat> v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

bool all_zero(const std::vector<Rat>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

}  // namespace

std::optional<int> DiagonalModel::find(const Endpoint& a, const Endpoint& b) const {
  auto it = index.find(key(a, b));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool DiagonalModel::is_up(const Endpoint& a, const Endpoint& b) const {
  return cmp_points(point(a), point(b)) == Order::Less;
}

DiagonalModel admissible_diagonals(const StablePolygon& p) {
  DiagonalModel m;
  m.poly = p;
  const DynkinType& t = p.type;
  int h = p.h(), n = t.rank;
  UnionFind uf;
  if (t.family == Family::A)
    build_A(uf, h);
  else if (t.family == Family::D)
    build_D(uf, h);
  else
    build_E(uf, n, h);

  std::map<int, std::vector<SymPair>> groups;
  for (size_t i = 0; i < uf.keys.size(); ++i) groups[uf.root((int)i)].push_back(uf.keys[i]);
  std::vector<std::vector<SymPair>> merged;
  if (t.family == Family::E) {
    const FormalModel& fm = e_formal_model(t);
    std::map<std::vector<Rat>, size_t> by_formal;
    for (auto& [r, ms] : groups) {
      auto f0 = sign_normal(formal_diff(fm, ms[0].first, ms[0].second));
      if (all_zero(f0)) throw DiagonalError("formally degenerate diagonal " + ms[0].first.str() + ms[0].second.str());
      for (const auto& k : ms)
        if (sign_normal(formal_diff(fm, k.first, k.second)) != f0)
          throw DiagonalError("inconsistent class: " + k.first.str() + k.second.str() + " vs " +
                              ms[0].first.str() + ms[0].second.str());
      auto it = by_formal.find(f0);
      if (it == by_formal.end()) {
        by_formal[f0] = merged.size();
        merged.push_back(ms);
      } else {
        merged[it->second].insert(merged[it->second].end(), ms.begin(), ms.end());
      }
    }
  } else {
    for (auto& [r, ms] : groups) merged.push_back(ms);
  }

  for (auto& ms : merged) {
    DiagonalClass c;
    for (const auto& k : ms) {
      Order o = cmp_points(m.point(k.first), m.point(k.second));
      if (o == Order::Equal) throw DiagonalError("degenerate diagonal " + k.first.str() + k.second.str());
      c.members.push_back(o == Order::Less ? k : SymPair{k.second, k.first});
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members.front();
    c.tail = m.point(c.rep.first);
    c.head = m.point(c.rep.second);
    c.vec = c.head - c.tail;
    for (const auto& k : c.members)
      if (m.point(k.second) - m.point(k.first) != c.vec)
        throw DiagonalError("inconsistent class: " + k.first.str() + k.second.str() + " vs " + c.rep.first.str() +
                            c.rep.second.str());
    m.classes.push_back(std::move(c));
  }
  std::sort(m.classes.begin(), m.classes.end(),
            [](const DiagonalClass& a, const DiagonalClass& b) { return a.rep < b.rep; });
  for (size_t i = 0; i < m.classes.size(); ++i)
    for (const auto& k : m.classes[i].members) m.index[key(k.first, k.second)] = (int)i;
  if ((int)m.classes.size() != num_positive_roots(t))
    throw DiagonalError("found " + std::to_string(m.classes.size()) + " diagonal classes, expected " +
                        std::to_string(num_positive_roots(t)));
  if (t.family == Family::E) {
    const FormalModel& fm = e_formal_model(t);
    for (const auto& c : m.classes) m.formal.push_back(formal_diff(fm, c.rep.first, c.rep.second));
  }
  return m;
}

std::vector<PointTriple> admissible_triangles(const DiagonalModel& m) {
  std::set<Endpoint> pts;
  std::set<std::pair<Endpoint, Endpoint>> adj;
  for (const auto& [k, c] : m.index) {
    pts.insert(k.first);
    pts.insert(k.second);
    adj.insert(k);
  }
  auto joined = [&](const Endpoint& a, const Endpoint& b) { return adj.count(key(a, b)) > 0; };
  std::vector<Endpoint> v(pts.begin(), pts.end());
  std::vector<PointTriple> out;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (!joined(v[i], v[j])) continue;
      for (size_t k = j + 1; k < v.size(); ++k)
        if (joined(v[i], v[k]) && joined(v[j], v[k])) out.push_back({v[i], v[j], v[k]});
    }
  return out;
}

std::vector<int> upward_diagonals(const DiagonalModel& m) {
  std::vector<int> ids(m.classes.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return cmp_arg(m.classes[a].vec, m.classes[b].vec) == Order::Greater;
  });
  return ids;
}

namespace {

std::vector<Endpoint> sorted_points(const DiagonalModel& m, std::vector<Endpoint> pts, bool allow_puncture_tie) {
  std::stable_sort(pts.begin(), pts.end(), [&](const Endpoint& a, const Endpoint& b) {
    Order o = cmp_points(m.point(a), m.point(b));
    if (o != Order::Equal) return o == Order::Less;
    return a.tag == '-' && b.tag == '+';
  });
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    if (m.point(pts[i]) != m.point(pts[i + 1])) continue;
    bool punct = pts[i].tag == '-' && pts[i + 1].tag == '+';
    if (!(allow_puncture_tie && punct))
      throw DiagonalError("ordering ambiguity: " + pts[i].str() + " coincides with " + pts[i + 1].str());
  }
  return pts;
}

int require_class(const DiagonalModel& m, const Endpoint& a, const Endpoint& b, int label) {
  auto c = m.find(a, b);
  if (!c) throw DiagonalError("simple s_" + std::to_string(label) + " = " + a.str() + b.str() + " is not admissible");
  return *c;
}

SymPair up_pair(const DiagonalModel& m, const Endpoint& a, const Endpoint& b) {
  return m.is_up(a, b) ? SymPair{a, b} : SymPair{b, a};
}

void simples_A(const DiagonalModel& m, SimpleSet& s) {
  int h = m.poly.h();
  std::vector<Endpoint> pts;
  for (int j = 0; j < h; ++j) pts.push_back({'V', j});
  s.yorder = sorted_points(m, pts, false);
  for (int i = 0; i + 1 < h; ++i) s.pairs.push_back({s.yorder[i], s.yorder[i + 1]});
}

void simples_D(const DiagonalModel& m, SimpleSet& s) {
  int h = m.poly.h(), n = m.poly.type.rank;
  std::vector<Endpoint> pts;
  for (int j = 0; j < h; ++j) pts.push_back({'V', j});
  pts.push_back({'-', 0});
  pts.push_back({'+', 0});
  s.yorder = sorted_points(m, pts, true);
  RatPoint o = m.poly.centroid();
  for (int i = 0; i < 2 * n; ++i) {
    RatPoint a = m.point(s.yorder[i]), b = m.point(s.yorder[2 * n - 1 - i]);
    if (a.x + b.x != 2 * o.x || a.y + b.y != 2 * o.y) throw DiagonalError("Y-order is not centrally symmetric");
  }
  int lo = -1, hi = -1;
  for (int i = 0; i < 2 * n; ++i)
    if (s.yorder[i].tag != 'V') (lo < 0 ? lo : hi) = i;
  if (lo == n - 1 && hi == n)
    s.d_case = 1;
  else if (lo == n - 2 && hi == n + 1)
    s.d_case = 2;
  else
    throw DiagonalError("punctures are not among Y_{+-1}, Y_{+-2}");
  for (int k = 1; k <= n - 1; ++k) s.pairs.push_back({s.yorder[k - 1], s.yorder[k]});
  if (s.d_case == 1)
    s.pairs.push_back({s.yorder[n - 2], s.yorder[n]});
  else
    s.pairs.push_back({s.yorder[n - 1], s.yorder[n + 1]});
  s.locator.push_back(std::string("B = Y_{+-") + (s.d_case == 1 ? "1" : "2") + "}, lower puncture " +
                      s.yorder[lo].str());
}

void simples_E(const DiagonalModel& m, SimpleSet& s) {
  int h = m.poly.h(), n = m.poly.type.rank;
  std::vector<Endpoint> pts;
  for (int j = 0; j < h; ++j) pts.push_back({'V', j});
  for (int j = 0; j < h; ++j) pts.push_back({'W', j});
  s.yorder = sorted_points(m, pts, false);
  std::set<int> low;
  for (int i = 0; i < n - 3; ++i) {
    if (s.yorder[i].tag != 'V') throw DiagonalError("lowest points are not all vertices V_j");
    low.insert(s.yorder[i].idx);
  }
  int r = -1;
  for (int rr = 0; rr < h && r < 0; ++rr) {
    std::set<int> want;
    for (int i = 1; i <= n - 3; ++i) want.insert(StablePolygon::wrap(rr + i, h));
    if (want == low) r = rr;
  }
  if (r < 0) throw DiagonalError("P_{n-3} is not a run of consecutive vertices");
  s.e_shift = r;
  auto V = [&](int j) { return Endpoint{'V', StablePolygon::wrap(j + r, h)}; };
  auto W = [&](int j) { return Endpoint{'W', StablePolygon::wrap(j + r, h)}; };
  std::vector<Endpoint> dl{V(0), W(1), W(3)}, dr{W(2), W(4), V(n - 2)};
  s.e_left = point_less(m.point(W(1)), m.point(W(4)));
  RatVec shift = m.point(W(2)) - m.point(V(0));
  bool parallel = m.point(W(4)) - m.point(W(1)) == shift && m.point(V(n - 2)) - m.point(W(3)) == shift;
  std::vector<Endpoint> J;
  for (int i = 1; i <= n - 3; ++i) J.push_back(V(i));
  for (const auto& e : s.e_left ? dl : dr) J.push_back(e);
  J = sorted_points(m, J, false);
  std::vector<int> labels{1, 2};
  for (int i = 4; i <= n; ++i) labels.push_back(i);
  s.pairs.assign(n, {});
  for (int i = 0; i + 1 < n; ++i) s.pairs[labels[i] - 1] = {J[n - 2 - i], J[n - 1 - i]};
  s.pairs[2] = up_pair(m, V(0), W(2));
  s.locator.push_back("relabel offset r=" + std::to_string(r));
  s.locator.push_back(std::string("Delta_+ = ") + (s.e_left ? "Delta_L" : "Delta_R"));
  s.locator.push_back(std::string("Delta_L, Delta_R translates: ") + (parallel ? "yes" : "no"));
  std::string hull = "J_n:";
  for (const auto& e : J) hull += " " + e.str();
  s.locator.push_back(hull);
}

}  // namespace

SimpleSet simples(const DiagonalModel& m) {
  SimpleSet s;
  Family f = m.poly.type.family;
  if (f == Family::A)
    simples_A(m, s);
  else if (f == Family::D)
    simples_D(m, s);
  else
    simples_E(m, s);
  std::set<int> seen;
  for (size_t i = 0; i < s.pairs.size(); ++i) {
    int c = require_class(m, s.pairs[i].first, s.pairs[i].second, (int)i + 1);
    if (!seen.insert(c).second) throw DiagonalError("simples are not pairwise distinct");
    s.cls.push_back(c);
  }
  return s;
}

namespace {

DimVector unit_vec(int n, int i) {
  DimVector d(n, 0);
  d[i] = 1;
  return d;
}

DimVector add(DimVector a, const DimVector& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::map<Endpoint, int> positions(const SimpleSet& s) {
  std::map<Endpoint, int> pos;
  for (size_t i = 0; i < s.yorder.size(); ++i) pos[s.yorder[i]] = (int)i;
  return pos;
}

DimVector decompose_A(const std::map<Endpoint, int>& pos, const DiagonalClass& c, int n) {
  int a = pos.at(c.rep.first), b = pos.at(c.rep.second);
  DimVector d(n, 0);
  for (int i = a; i < b; ++i) d[i] = 1;
  return d;
}

// Y-indices i < j in {-n..-1, 1..n}
DimVector decompose_D(int i, int j, int n, int dcase, int depth = 0) {
  if (depth > 8) throw DiagonalError("D decomposition does not terminate");
  if (i == -j) throw DiagonalError("diameter is not admissible");
  auto consecutive = [&](int a, int b) {
    DimVector d(n, 0);
    for (int k = a; k < b; ++k) d[k + n] = 1;
    return d;
  };
  DimVector en = unit_vec(n, n - 1);
  if (dcase == 2 && ((i == -1 && j == 2) || (i == -2 && j == 1))) return en;
  if (j <= -1) return consecutive(i, j);
  if (i + j > 0) return decompose_D(-j, -i, n, dcase, depth + 1);
  if (dcase == 1) {
    if (j == 1) return add(consecutive(i, -2), en);
    return add(decompose_D(i, -1, n, dcase, depth + 1), decompose_D(-j, 1, n, dcase, depth + 1));
  }
  if (j == 1) return add(decompose_D(i, -2, n, dcase, depth + 1), en);
  if (j == 2) return add(decompose_D(i, -1, n, dcase, depth + 1), en);
  return add(decompose_D(i, -2, n, dcase, depth + 1), decompose_D(-j, 2, n, dcase, depth + 1));
}

struct Split {
  int a, b;
};

std::vector<std::vector<Split>> all_splits(const DiagonalModel& m) {
  int h = m.poly.h();
  std::vector<Endpoint> mids;
  for (int j = 0; j < h; ++j) mids.push_back({'V', j});
  for (int j = 0; j < h; ++j) mids.push_back({'W', j});
  std::vector<std::vector<Split>> out(m.classes.size());
  for (size_t c = 0; c < m.classes.size(); ++c) {
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : m.classes[c].members)
      for (const auto& x : mids) {
        if (x == a || x == b || !m.is_up(a, x) || !m.is_up(x, b)) continue;
        auto c1 = m.find(a, x), c2 = m.find(x, b);
        if (!c1 || !c2) continue;
        if (seen.insert({*c1, *c2}).second) out[c].push_back({*c1, *c2});
      }
  }
  return out;
}

std::vector<DimVector> decompose_E(const DiagonalModel& m, const SimpleSet& s, std::uint64_t seed) {
  int n = m.poly.type.rank;
  size_t N = m.classes.size();
  auto splits = all_splits(m);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (auto& v : splits) std::shuffle(v.begin(), v.end(), rng);
  }
  std::vector<std::optional<DimVector>> memo(N);
  std::vector<char> busy(N, 0);
  for (int i = 0; i < n; ++i) memo[s.cls[i]] = unit_vec(n, i);
  std::function<std::optional<DimVector>(int)> rec = [&](int c) -> std::optional<DimVector> {
    if (memo[c]) return memo[c];
    busy[c] = 1;
    std::optional<DimVector> res;
    for (const auto& sp : splits[c]) {
      if (busy[sp.a] || busy[sp.b]) continue;
      auto d1 = rec(sp.a);
      if (!d1) continue;
      auto d2 = rec(sp.b);
      if (!d2) continue;
      res = add(*d1, *d2);
      break;
    }
    busy[c] = 0;
    if (res) memo[c] = res;
    return res;
  };
  std::vector<DimVector> out(N);
  for (size_t c = 0; c < N; ++c) {
    auto d = rec((int)c);
    if (!d) throw DiagonalError("no triangle split for non-simple class " + m.classes[c].rep.first.str() +
                                m.classes[c].rep.second.str());
    out[c] = *d;
  }
  return out;
}

}  // namespace

std::vector<DimVector> decompose_all(const DiagonalModel& m, const SimpleSet& s, std::uint64_t seed) {
  const DynkinType& t = m.poly.type;
  int n = t.rank;
  std::vector<DimVector> out;
  if (t.family == Family::E) {
    out = decompose_E(m, s, seed);
  } else {
    auto pos = positions(s);
    for (const auto& c : m.classes) {
      if (t.family == Family::A) {
        out.push_back(decompose_A(pos, c, n));
      } else {
        auto yi = [&](const Endpoint& e) {
          int p = pos.at(e);
          return p < n ? p - n : p - n + 1;
        };
        out.push_back(decompose_D(yi(c.rep.first), yi(c.rep.second), n, s.d_case));
      }
    }
  }
  for (size_t c = 0; c < m.classes.size(); ++c) {
    RatVec sum{0, 0};
    for (int i = 0; i < n; ++i)
      if (out[c][i]) sum = sum + Rat(out[c][i]) * m.classes[s.cls[i]].vec;
    if (sum != m.classes[c].vec)
      throw DiagonalError("decomposition of " + m.classes[c].rep.first.str() + m.classes[c].rep.second.str() +
                          " does not sum to its vector");
    if (!m.formal.empty()) {
      std::vector<Rat> f(m.formal[c].size(), Rat(0));
      for (int i = 0; i < n; ++i)
        for (size_t k = 0; k < f.size(); ++k) f[k] += out[c][i] * m.formal[s.cls[i]][k];
      if (f != m.formal[c]) throw DiagonalError("decomposition fails the formal vector check");
    }
  }
  return out;
}

DimVector decompose(const DiagonalModel& m, const SimpleSet& s, int cls) {
  return decompose_all(m, s).at(cls);
}

bool split_paths_agree(const DiagonalModel& m, const SimpleSet& s, const std::vector<DimVector>& dims,
                       std::string* detail) {
  std::set<int> simple(s.cls.begin(), s.cls.end());
  auto splits = all_splits(m);
  for (size_t c = 0; c < m.classes.size(); ++c) {
    if (!simple.count((int)c) && splits[c].empty()) {
      if (detail) *detail = "no split for class " + std::to_string(c);
      return false;
    }
    for (const auto& sp : splits[c])
      if (add(dims[sp.a], dims[sp.b]) != dims[c]) {
        if (detail)
          *detail = "class " + std::to_string(c) + " split into " + std::to_string(sp.a) + "+" +
                    std::to_string(sp.b) + " disagrees";
        return false;
      }
  }
  return true;
}

std::vector<Arrow> IntersectionQuiver::ungraded() const {
  std::vector<Arrow> out;
  for (const auto& a : arrows) out.push_back({a.src, a.dst});
  return out;
}

namespace {

bool strictly_inside_triangle(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& p) {
  int s1 = sgn(cross(b - a, p - a)), s2 = sgn(cross(c - b, p - b)), s3 = sgn(cross(a - c, p - c));
  return s1 != 0 && s1 == s2 && s2 == s3;
}

}  // namespace

std::vector<GradedArrow> essential_intersections(const DiagonalModel& m, const SimpleSet& s) {
  int n = (int)s.cls.size();
  std::map<std::pair<int, int>, GradedArrow> found;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const DiagonalClass& cx = m.classes[s.cls[x]];
      const DiagonalClass& cy = m.classes[s.cls[y]];
      for (const auto& [a1, b1] : cx.members)
        for (const auto& [a2, b2] : cy.members) {
          struct Cand {
            Endpoint shared, o1, o2;
          };
          std::vector<Cand> cands;
          if (b1 == a2) cands.push_back({b1, a1, b2});
          if (b2 == a1) cands.push_back({a1, b1, a2});
          if (a1 == a2) cands.push_back({a1, b1, b2});
          if (b1 == b2) cands.push_back({b1, a1, a2});
          for (const auto& cd : cands) {
            if (cd.o1 == cd.o2 || !m.find(cd.o1, cd.o2)) continue;
            RatPoint P = m.point(cd.shared), p1 = m.point(cd.o1), p2 = m.point(cd.o2);
            if (!m.poly.B.empty()) {
              bool blocked = false;
              for (const auto& b : m.poly.B) blocked = blocked || strictly_inside_triangle(P, p1, p2, b);
              if (blocked) continue;
            }
            int c = sgn(cross(p1 - P, p2 - P));
            if (c == 0) continue;
            int src = c > 0 ? x : y, dst = c > 0 ? y : x;
            int grade = cmp_arg(m.classes[s.cls[dst]].vec, m.classes[s.cls[src]].vec) == Order::Less ? 1 : 0;
            GradedArrow ar{src + 1, dst + 1, grade};
            auto it = found.find({x, y});
            if (it == found.end())
              found[{x, y}] = ar;
            else if (!(it->second == ar))
              throw DiagonalError("conflicting essential intersections between s_" + std::to_string(x + 1) +
                                  " and s_" + std::to_string(y + 1));
          }
        }
    }
  std::vector<GradedArrow> out;
  for (auto& [k, a] : found) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

IntersectionQuiver intersection_quiver(const DiagonalModel& m, const SimpleSet& s) {
  IntersectionQuiver q;
  q.n = (int)s.cls.size();
  q.arrows = essential_intersections(m, s);
  std::set<std::pair<int, int>> got, want;
  for (const auto& a : q.arrows) got.insert({std::min(a.src, a.dst), std::max(a.src, a.dst)});
  for (auto [a, b] : diagram_edges(m.poly.type)) want.insert({a, b});
  if (got != want || q.arrows.size() != want.size()) {
    std::string g;
    for (const auto& a : q.arrows) g += " " + std::to_string(a.src) + "->" + std::to_string(a.dst);
    throw DiagonalError("intersection quiver is not of shape " + m.poly.type.name() + ":" + g);
  }
  return q;
}

RatVec StabilityFunction::charge(const DimVector& d) const {
  RatVec v{0, 0};
  for (size_t i = 0; i < Z.size(); ++i)
    if (d[i]) v = v + Rat(d[i]) * Z[i];
  return v;
}

Order StabilityFunction::cmp_phase(const DimVector& a, const DimVector& b) const {
  return cmp_arg(charge(a), charge(b));
}

PolygonAnalysis stability_function(const StablePolygon& p) {
  PolygonAnalysis a;
  a.model = admissible_diagonals(p);
  a.simple = simples(a.model);
  a.quiver = intersection_quiver(a.model, a.simple);
  for (int c : a.simple.cls) a.Z.Z.push_back(a.model.classes[c].vec);
  auto dims = decompose_all(a.model, a.simple);
  for (int c : upward_diagonals(a.model)) a.phases.push_back({c, dims[c], a.model.classes[c].vec});
  return a;
}

DynkinQuiver realized_quiver(const PolygonAnalysis& a) {
  return quiver_from_arrows(a.model.poly.type, a.quiver.ungraded());
}

}  // namespace sgon
