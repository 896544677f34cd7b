#include "stablegon/dynkin.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sgon {

char family_char(Family f) { return f == Family::A ? 'A' : (f == Family::D ? 'D' : 'E'); }

Family family_from_char(char c) {
  if (c == 'A') return Family::A;
  if (c == 'D') return Family::D;
  if (c == 'E') return Family::E;
  throw std::invalid_argument(std::string("unknown Dynkin family: ") + c);
}

std::string DynkinType::name() const { return family_char(family) + std::to_string(rank); }

void validate_type(const DynkinType& t) {
  bool ok = (t.family == Family::A && t.rank >= 1) || (t.family == Family::D && t.rank >= 4) ||
            (t.family == Family::E && t.rank >= 6 && t.rank <= 8);
  if (!ok) throw std::invalid_argument("invalid Dynkin type " + t.name());
}

int coxeter_number(const DynkinType& t) {
  validate_type(t);
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::D: return 2 * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
  }
  return 0;
}

int num_positive_roots(const DynkinType& t) { return t.rank * coxeter_number(t) / 2; }

std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t) {
  validate_type(t);
  int n = t.rank;
  std::vector<std::pair<int, int>> e;
  if (t.family == Family::A) {
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  } else if (t.family == Family::D) {
    for (int i = 1; i <= n - 3; ++i) e.push_back({i, i + 1});
    e.push_back({n - 2, n - 1});
    e.push_back({n - 2, n});
  } else {
    e = {{1, 2}, {2, 4}, {3, 4}};
    for (int i = 4; i < n; ++i) e.push_back({i, i + 1});
  }
  return e;
}

std::vector<DimVector> positive_roots(const DynkinType& t) {
  int n = t.rank;
  auto edges = diagram_edges(t);
  std::vector<std::vector<int>> nbr(n + 1);
  for (auto [a, b] : edges) {
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::set<DimVector> seen;
  std::deque<DimVector> queue;
  for (int i = 0; i < n; ++i) {
    DimVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    DimVector b = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      int pair = 2 * b[i - 1];
      for (int j : nbr[i]) pair -= b[j - 1];
      if (pair >= 0) continue;
      DimVector c = b;
      c[i - 1] -= pair;
      if (seen.insert(c).second) queue.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Arrow> DynkinQuiver::arrows() const {
  auto edges = diagram_edges(type);
  std::vector<Arrow> out;
  for (size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    out.push_back(eps[k] > 0 ? Arrow{a, b} : Arrow{b, a});
  }
  return out;
}

DynkinQuiver DynkinQuiver::opposite() const {
  DynkinQuiver q = *this;
  for (int& e : q.eps) e = -e;
  return q;
}

std::string DynkinQuiver::sign_string() const {
  std::string s;
  for (int e : eps) s += e > 0 ? '+' : '-';
  return s;
}

DynkinQuiver make_quiver(const DynkinType& t, const std::string& signs) {
  validate_type(t);
  if ((int)signs.size() != t.rank - 1) throw std::invalid_argument("orientation length mismatch");
  DynkinQuiver q{t, {}};
  for (char c : signs) {
    if (c != '+' && c != '-') throw std::invalid_argument("orientation sign must be + or -");
    q.eps.push_back(c == '+' ? 1 : -1);
  }
  return q;
}

DynkinQuiver quiver_from_arrows(const DynkinType& t, const std::vector<Arrow>& arrows) {
  auto edges = diagram_edges(t);
  if (arrows.size() != edges.size()) throw std::invalid_argument("arrow count does not match diagram");
  DynkinQuiver q{t, std::vector<int>(edges.size(), 0)};
  for (const Arrow& a : arrows) {
    bool found = false;
    for (size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].first == a.src && edges[k].second == a.dst && q.eps[k] == 0) {
        q.eps[k] = 1;
        found = true;
      } else if (edges[k].first == a.dst && edges[k].second == a.src && q.eps[k] == 0) {
        q.eps[k] = -1;
        found = true;
      }
      if (found) break;
    }
    if (!found) throw std::invalid_argument("arrows do not orient the canonical diagram");
  }
  return q;
}

std::vector<DynkinQuiver> all_orientations(const DynkinType& t) {
  validate_type(t);
  int m = t.rank - 1;
  std::vector<DynkinQuiver> out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    DynkinQuiver q{t, std::vector<int>(m)};
    for (int k = 0; k < m; ++k) q.eps[k] = ((mask >> (m - 1 - k)) & 1) ? -1 : 1;
    out.push_back(q);
  }
  return out;
}

int euler_form(const DynkinQuiver& q, const DimVector& a, const DimVector& b) {
  int n = q.rank();
  if ((int)a.size() != n || (int)b.size() != n) throw std::invalid_argument("euler_form: rank mismatch");
  int s = 0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  for (const Arrow& ar : q.arrows()) s -= a[ar.src - 1] * b[ar.dst - 1];
  return s;
}

std::vector<std::vector<int>> euler_matrix(const DynkinQuiver& q) {
  int n = q.rank();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (const Arrow& a : q.arrows()) m[a.src - 1][a.dst - 1] -= 1;
  return m;
}

int lambda_form(const DynkinQuiver& q, int i, int j) {
  auto m = euler_matrix(q);
  return m[j - 1][i - 1] - m[i - 1][j - 1];
}

int lambda_vec(const DynkinQuiver& q, const DimVector& a, const DimVector& b) {
  return euler_form(q, b, a) - euler_form(q, a, b);
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t) {
  int n = t.rank;
  auto edges = diagram_edges(t);
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : edges) {
    es.insert({a, b});
    es.insert({b, a});
  }
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (auto [a, b] : edges)
      if (!es.count({p[a - 1], p[b - 1]})) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<int> perm(n + 1, 0);
      for (int i = 0; i < n; ++i) perm[i + 1] = p[i];
      out.push_back(perm);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<std::vector<int>> match_quiver(const DynkinQuiver& target, const std::vector<Arrow>& arrows) {
  auto want = target.arrows();
  std::sort(want.begin(), want.end());
  if (arrows.size() != want.size()) return std::nullopt;
  for (const auto& p : diagram_automorphisms(target.type)) {
    std::vector<Arrow> mapped;
    for (const Arrow& a : arrows) {
      if (a.src < 1 || a.src > target.rank() || a.dst < 1 || a.dst > target.rank()) return std::nullopt;
      mapped.push_back({p[a.src], p[a.dst]});
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == want) return p;
  }
  return std::nullopt;
}

int total_dim(const DimVector& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

std::string dim_string(const DimVector& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

}  // namespace sgon
