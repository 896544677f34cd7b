#include "stablegon/module.hpp"

#include <random>
#include <stdexcept>

namespace sgon {

namespace {

constexpr std::uint64_t kP = 2147483647;  // 2^31 - 1

struct Incident {
  int edge, other;
};

std::vector<Incident> incident(const DynkinType& t, int k) {
  std::vector<Incident> out;
  auto edges = diagram_edges(t);
  for (size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == k) out.push_back({(int)e, edges[e].second});
    if (edges[e].second == k) out.push_back({(int)e, edges[e].first});
  }
  return out;
}

DynkinQuiver flip_vertex(DynkinQuiver q, int k) {
  auto edges = diagram_edges(q.type);
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].first == k || edges[e].second == k) q.eps[e] = -q.eps[e];
  return q;
}

bool is_sink(const DynkinQuiver& q, int k) {
  for (const Arrow& a : q.arrows())
    if (a.src == k) return false;
  return true;
}

bool is_source(const DynkinQuiver& q, int k) {
  for (const Arrow& a : q.arrows())
    if (a.dst == k) return false;
  return true;
}

// k_1..k_n with k_j a sink (or source) after reflecting k_1..k_{j-1}
std::vector<int> admissible_order(const DynkinQuiver& q, bool sinks) {
  int n = q.rank();
  std::vector<int> order;
  std::vector<bool> used(n + 1, false);
  DynkinQuiver cur = q;
  while ((int)order.size() < n) {
    int pick = 0;
    for (int k = 1; k <= n && !pick; ++k)
      if (!used[k] && (sinks ? is_sink(cur, k) : is_source(cur, k))) pick = k;
    if (!pick) throw std::logic_error("no admissible ordering");
    used[pick] = true;
    order.push_back(pick);
    cur = flip_vertex(cur, pick);
  }
  return order;
}

DimVector reflect_root(const DynkinType& t, DimVector x, int k) {
  int pairing = 2 * x[k - 1];
  for (auto [e, other] : incident(t, k)) pairing -= x[other - 1];
  x[k - 1] -= pairing;
  return x;
}

bool positive(const DimVector& d) {
  bool any = false;
  for (int v : d) {
    if (v < 0) return false;
    if (v > 0) any = true;
  }
  return any;
}

std::uint64_t to_mod(const Rat& r) {
  mpz_class num = r.get_num(), den = r.get_den();
  std::uint64_t a = mpz_fdiv_ui(num.get_mpz_t(), kP);
  std::uint64_t b = mpz_fdiv_ui(den.get_mpz_t(), kP);
  if (b == 0) throw std::domain_error("denominator divisible by the modulus");
  std::uint64_t inv = 1, base = b, e = kP - 2;
  while (e) {
    if (e & 1) inv = inv * base % kP;
    base = base * base % kP;
    e >>= 1;
  }
  return a * inv % kP;
}

std::uint64_t inv_mod(std::uint64_t a) {
  std::uint64_t r = 1, e = kP - 2;
  while (e) {
    if (e & 1) r = r * a % kP;
    a = a * a % kP;
    e >>= 1;
  }
  return r;
}

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

std::vector<size_t> rref_mod(ModMatrix& m, size_t cols) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    std::uint64_t inv = inv_mod(m[row][c]);
    for (size_t k = c; k < cols; ++k) m[row][k] = m[row][k] * inv % kP;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      std::uint64_t f = m[r][c];
      for (size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + (kP - f) * m[row][k]) % kP;
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

size_t rank_mod(ModMatrix m, size_t cols) { return rref_mod(m, cols).size(); }

std::vector<std::vector<std::uint64_t>> nullspace_mod(ModMatrix m, size_t cols) {
  auto piv = rref_mod(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (kP - m[r][f]) % kP;
    basis.push_back(std::move(v));
  }
  return basis;
}

// offsets of f_v inside the unknown vector
std::vector<size_t> hom_offsets(const Representation& m, const Representation& n, size_t& total) {
  std::vector<size_t> off(m.dim.size());
  total = 0;
  for (size_t v = 0; v < m.dim.size(); ++v) {
    off[v] = total;
    total += (size_t)n.dim[v] * m.dim[v];
  }
  return off;
}

// commuting-square equations N_a f_s - f_t M_a = 0
RatMatrix hom_equations(const Representation& m, const Representation& n, size_t& unknowns) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("hom_space: different quivers");
  auto off = hom_offsets(m, n, unknowns);
  RatMatrix rows;
  auto arrows = m.quiver.arrows();
  for (size_t e = 0; e < arrows.size(); ++e) {
    int s = arrows[e].src - 1, t = arrows[e].dst - 1;
    int ms = m.dim[s], nt = n.dim[t], ns = n.dim[s], mt = m.dim[t];
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < ms; ++c) {
        std::vector<Rat> row(unknowns, Rat(0));
        for (int x = 0; x < ns; ++x) row[off[s] + (size_t)x * ms + c] += n.mats[e][r][x];
        for (int y = 0; y < mt; ++y) row[off[t] + (size_t)r * mt + y] -= m.mats[e][y][c];
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

struct ModRep {
  std::vector<ModMatrix> mats;
};

ModRep to_mod_rep(const Representation& m) {
  ModRep r;
  for (const auto& mat : m.mats) {
    ModMatrix mm;
    for (const auto& row : mat) {
      std::vector<std::uint64_t> rr;
      for (const auto& x : row) rr.push_back(to_mod(x));
      mm.push_back(std::move(rr));
    }
    r.mats.push_back(std::move(mm));
  }
  return r;
}

ModMatrix hom_equations_mod(const Representation& m, const ModRep& mp, const Representation& n, const ModRep& np,
                            size_t& unknowns) {
  auto off = hom_offsets(m, n, unknowns);
  ModMatrix rows;
  auto arrows = m.quiver.arrows();
  for (size_t e = 0; e < arrows.size(); ++e) {
    int s = arrows[e].src - 1, t = arrows[e].dst - 1;
    int ms = m.dim[s], nt = n.dim[t], ns = n.dim[s], mt = m.dim[t];
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < ms; ++c) {
        std::vector<std::uint64_t> row(unknowns, 0);
        for (int x = 0; x < ns; ++x) row[off[s] + (size_t)x * ms + c] = np.mats[e][r][x];
        for (int y = 0; y < mt; ++y) {
          auto& cell = row[off[t] + (size_t)r * mt + y];
          cell = (cell + kP - mp.mats[e][y][c]) % kP;
        }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

RepMap unpack(const Representation& m, const Representation& n, const std::vector<Rat>& x) {
  size_t total;
  auto off = hom_offsets(m, n, total);
  RepMap f(m.dim.size());
  for (size_t v = 0; v < m.dim.size(); ++v) {
    f[v].assign(n.dim[v], std::vector<Rat>(m.dim[v], Rat(0)));
    for (int r = 0; r < n.dim[v]; ++r)
      for (int c = 0; c < m.dim[v]; ++c) f[v][r][c] = x[off[v] + (size_t)r * m.dim[v] + c];
  }
  return f;
}

int total_rank_mod(const Representation& m, const Representation& n, const std::vector<std::uint64_t>& x,
                   bool& injective) {
  size_t total;
  auto off = hom_offsets(m, n, total);
  int sum = 0;
  injective = true;
  for (size_t v = 0; v < m.dim.size(); ++v) {
    if (m.dim[v] == 0) continue;
    ModMatrix f(n.dim[v], std::vector<std::uint64_t>(m.dim[v]));
    for (int r = 0; r < n.dim[v]; ++r)
      for (int c = 0; c < m.dim[v]; ++c) f[r][c] = x[off[v] + (size_t)r * m.dim[v] + c];
    int rk = (int)rank_mod(f, m.dim[v]);
    sum += rk;
    if (rk < m.dim[v]) injective = false;
  }
  return sum;
}

int total_rank(const Representation& m, const RepMap& f, bool& injective) {
  int sum = 0;
  injective = true;
  for (size_t v = 0; v < m.dim.size(); ++v) {
    if (m.dim[v] == 0) continue;
    int rk = (int)rank(f[v], m.dim[v]);
    sum += rk;
    if (rk < m.dim[v]) injective = false;
  }
  return sum;
}

}  // namespace

Representation Representation::zero(const DynkinQuiver& q) {
  Representation r;
  r.quiver = q;
  r.dim.assign(q.rank(), 0);
  r.mats.assign(q.arrows().size(), RatMatrix{});
  return r;
}

Representation Representation::simple(const DynkinQuiver& q, int vertex) {
  Representation r = zero(q);
  r.dim[vertex - 1] = 1;
  auto arrows = q.arrows();
  for (size_t e = 0; e < arrows.size(); ++e)
    r.mats[e] = zeros(r.dim[arrows[e].dst - 1], r.dim[arrows[e].src - 1]);
  return r;
}

void Representation::check_shapes() const {
  auto arrows = quiver.arrows();
  if (mats.size() != arrows.size() || (int)dim.size() != quiver.rank())
    throw std::logic_error("representation: wrong number of maps");
  for (size_t e = 0; e < arrows.size(); ++e) {
    int rows = dim[arrows[e].dst - 1], cols = dim[arrows[e].src - 1];
    if ((int)mats[e].size() != rows) throw std::logic_error("representation: bad row count");
    for (const auto& row : mats[e])
      if ((int)row.size() != cols) throw std::logic_error("representation: bad column count");
  }
}

Representation reflect_at_source(const Representation& m, int k) {
  if (!is_source(m.quiver, k)) throw std::logic_error("reflect_at_source: not a source");
  auto inc = incident(m.quiver.type, k);
  int dk = m.dim[k - 1];
  size_t sum = 0;
  std::vector<size_t> off;
  for (auto [e, i] : inc) {
    off.push_back(sum);
    sum += m.dim[i - 1];
  }
  // G^T : dk x sum, its nullspace is the annihilator of im G
  RatMatrix gt = zeros(dk, sum);
  for (size_t a = 0; a < inc.size(); ++a) {
    int di = m.dim[inc[a].other - 1];
    for (int r = 0; r < di; ++r)
      for (int c = 0; c < dk; ++c) gt[c][off[a] + r] = m.mats[inc[a].edge][r][c];
  }
  auto ys = nullspace(gt, sum);
  Representation out = m;
  out.quiver = flip_vertex(m.quiver, k);
  int c = (int)ys.size();
  out.dim[k - 1] = c;
  for (size_t a = 0; a < inc.size(); ++a) {
    int di = m.dim[inc[a].other - 1];
    RatMatrix mat = zeros(c, di);
    for (int r = 0; r < c; ++r)
      for (int x = 0; x < di; ++x) mat[r][x] = ys[r][off[a] + x];
    out.mats[inc[a].edge] = std::move(mat);
  }
  out.check_shapes();
  return out;
}

Representation reflect_at_sink(const Representation& m, int k) {
  if (!is_sink(m.quiver, k)) throw std::logic_error("reflect_at_sink: not a sink");
  auto inc = incident(m.quiver.type, k);
  int dk = m.dim[k - 1];
  size_t sum = 0;
  std::vector<size_t> off;
  for (auto [e, i] : inc) {
    off.push_back(sum);
    sum += m.dim[i - 1];
  }
  RatMatrix h = zeros(dk, sum);
  for (size_t a = 0; a < inc.size(); ++a) {
    int di = m.dim[inc[a].other - 1];
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < di; ++c) h[r][off[a] + c] = m.mats[inc[a].edge][r][c];
  }
  auto ks = nullspace(h, sum);
  Representation out = m;
  out.quiver = flip_vertex(m.quiver, k);
  int c = (int)ks.size();
  out.dim[k - 1] = c;
  for (size_t a = 0; a < inc.size(); ++a) {
    int di = m.dim[inc[a].other - 1];
    RatMatrix mat = zeros(di, c);
    for (int r = 0; r < di; ++r)
      for (int j = 0; j < c; ++j) mat[r][j] = ks[j][off[a] + r];
    out.mats[inc[a].edge] = std::move(mat);
  }
  out.check_shapes();
  return out;
}

std::map<DimVector, Representation> indecomposables(const DynkinQuiver& q, bool from_sinks) {
  int n = q.rank();
  int want = num_positive_roots(q.type);
  auto order = admissible_order(q, from_sinks);
  std::vector<DynkinQuiver> chain{q};  // chain[t] = quiver after t reflections
  std::map<DimVector, Representation> out;
  for (int t = 0; (int)out.size() < want; ++t) {
    if (t > 2 * want + n) throw std::logic_error("indecomposables: knitting did not terminate");
    int v = order[t % n];
    DimVector root(n, 0);
    root[v - 1] = 1;
    for (int j = t; j >= 1; --j) root = reflect_root(q.type, root, order[(j - 1) % n]);
    if (positive(root) && !out.count(root)) {
      Representation m = Representation::simple(chain[t], v);
      for (int j = t; j >= 1; --j) {
        int k = order[(j - 1) % n];
        m = from_sinks ? reflect_at_source(m, k) : reflect_at_sink(m, k);
      }
      if (m.dim != root || !(m.quiver == q)) throw std::logic_error("indecomposables: reflection mismatch");
      if (hom_dim(m, m) != 1) throw std::logic_error("indecomposables: End is not trivial for " + dim_string(root));
      out.emplace(root, std::move(m));
    }
    chain.push_back(flip_vertex(chain[t], v));
  }
  return out;
}

std::vector<RepMap> hom_space(const Representation& m, const Representation& n) {
  size_t unknowns;
  RatMatrix eq = hom_equations(m, n, unknowns);
  std::vector<RepMap> out;
  for (const auto& x : nullspace(eq, unknowns)) out.push_back(unpack(m, n, x));
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  size_t unknowns;
  RatMatrix eq = hom_equations(m, n, unknowns);
  return (int)(unknowns - rank(eq, unknowns));
}

int hom_dim_mod_p(const Representation& m, const Representation& n) {
  size_t unknowns;
  RatMatrix eq = hom_equations(m, n, unknowns);
  ModMatrix mm(eq.size(), std::vector<std::uint64_t>(unknowns));
  for (size_t r = 0; r < eq.size(); ++r)
    for (size_t c = 0; c < unknowns; ++c) mm[r][c] = to_mod(eq[r][c]);
  return (int)(unknowns - rank_mod(mm, unknowns));
}

int ext1_dim(const Representation& m, const Representation& n) {
  return hom_dim(m, n) - euler_form(m.quiver, m.dim, n.dim);
}

bool is_hom(const Representation& m, const Representation& n, const RepMap& f) {
  auto arrows = m.quiver.arrows();
  for (size_t e = 0; e < arrows.size(); ++e) {
    int s = arrows[e].src - 1, t = arrows[e].dst - 1;
    auto lhs = multiply(n.mats[e], f[s], n.dim[s], m.dim[s]);
    auto rhs = multiply(f[t], m.mats[e], m.dim[t], m.dim[s]);
    if (lhs != rhs) return false;
  }
  return true;
}

bool is_injective(const Representation& m, const Representation&, const RepMap& f) {
  bool inj;
  total_rank(m, f, inj);
  return inj;
}

namespace {

EmbedResult embeds_impl(const Representation& m, const ModRep& mp, const Representation& n, const ModRep& np,
                        int trials, std::uint64_t seed) {
  EmbedResult res;
  for (size_t v = 0; v < m.dim.size(); ++v)
    if (m.dim[v] > n.dim[v]) {
      res.note = "dimension vector not dominated";
      return res;
    }
  size_t unknowns;
  ModMatrix mm = hom_equations_mod(m, mp, n, np, unknowns);

  // screen over F_p
  auto basis_p = nullspace_mod(mm, unknowns);
  if (basis_p.empty()) {
    res.note = "Hom is zero";
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  bool found = false;
  auto try_mod = [&](const std::vector<int>& w) {
    std::vector<std::uint64_t> x(unknowns, 0);
    for (size_t b = 0; b < basis_p.size(); ++b) {
      if (!w[b]) continue;
      std::uint64_t c = (std::uint64_t)((w[b] % (long long)kP + (long long)kP) % (long long)kP);
      for (size_t u = 0; u < unknowns; ++u) x[u] = (x[u] + c * basis_p[b][u]) % kP;
    }
    bool inj;
    res.best_rank = std::max(res.best_rank, total_rank_mod(m, n, x, inj));
    return inj;
  };
  for (int t = 0; t < trials && !found; ++t) {
    std::vector<int> w(basis_p.size());
    for (auto& c : w) c = coef(rng);
    found = try_mod(w);
  }
  for (size_t b = 0; b < basis_p.size() && !found; ++b) {
    std::vector<int> w(basis_p.size(), 0);
    w[b] = 1;
    found = try_mod(w);
  }
  if (!found) {
    res.note = "no injective map in " + std::to_string(trials) + " random combinations and the basis sweep";
    return res;
  }

  // exact certificate
  RatMatrix eq = hom_equations(m, n, unknowns);
  auto basis = nullspace(eq, unknowns);
  rng.seed(seed);
  auto try_exact = [&](const std::vector<int>& w) {
    std::vector<Rat> x(unknowns, Rat(0));
    for (size_t b = 0; b < basis.size(); ++b)
      if (w[b])
        for (size_t u = 0; u < unknowns; ++u) x[u] += w[b] * basis[b][u];
    RepMap f = unpack(m, n, x);
    bool inj;
    total_rank(m, f, inj);
    if (inj && is_hom(m, n, f)) {
      res.embeds = true;
      res.certificate = std::move(f);
      return true;
    }
    return false;
  };
  bool ok = false;
  for (int t = 0; t < trials && !ok; ++t) {
    std::vector<int> w(basis.size());
    for (auto& c : w) c = coef(rng);
    ok = try_exact(w);
  }
  for (size_t b = 0; b < basis.size() && !ok; ++b) {
    std::vector<int> w(basis.size(), 0);
    w[b] = 1;
    ok = try_exact(w);
  }
  if (!ok) res.note = "injective modulo p but no rational certificate found";
  return res;
}

}  // namespace

EmbedResult embeds(const Representation& m, const Representation& n, int trials, std::uint64_t seed) {
  if (!(m.quiver == n.quiver)) throw std::invalid_argument("embeds: different quivers");
  return embeds_impl(m, to_mod_rep(m), n, to_mod_rep(n), trials, seed);
}

TotalStabilityReport check_total_stability(const DynkinQuiver& q, const StabilityFunction& z, int trials,
                                           std::uint64_t seed) {
  TotalStabilityReport rep;
  rep.note = "submodules tested through indecomposable summands";
  auto inds = indecomposables(q);
  std::map<DimVector, ModRep> mods;
  for (const auto& [d, md] : inds) mods.emplace(d, to_mod_rep(md));
  for (const auto& [d, md] : inds) {
    if (!is_upward(z.charge(d)) || z.charge(d) == RatVec{0, 0}) {
      rep.verdict = false;
      rep.note = "charge of " + dim_string(d) + " is not in the upper half-plane";
      return rep;
    }
  }
  for (const auto& [d, md] : inds)
    for (const auto& [e, me] : inds) {
      if (e == d) continue;
      bool dominated = true;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > d[i]) dominated = false;
      if (!dominated) continue;
      PairRecord rec;
      rec.sub = e;
      rec.root = d;
      rec.phase = z.cmp_phase(e, d);
      if (rec.phase != Order::Less) {
        rec.embedding_checked = true;
        ++rep.embedding_checks;
        auto er = embeds_impl(me, mods.at(e), md, mods.at(d), trials, seed);
        rec.embeds = er.embeds;
        rec.violation = er.embeds;
        if (rec.violation && !rep.counterexample) {
          rep.counterexample = rec;
          rep.counterexample_map = er.certificate;
        }
      }
      if (rec.violation) rep.verdict = false;
      rep.log.push_back(rec);
    }
  return rep;
}

ExtQuiverReport ext_quiver_check(const DynkinQuiver& q, const IntersectionQuiver& iq) {
  ExtQuiverReport rep;
  int n = q.rank();
  std::vector<Representation> s;
  for (int i = 1; i <= n; ++i) s.push_back(Representation::simple(q, i));
  rep.ext.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rep.ext[i][j] = ext1_dim(s[i], s[j]);
  std::vector<std::vector<bool>> arrow(n, std::vector<bool>(n, false));
  for (const auto& a : iq.arrows) {
    if (a.grade != 1) {
      rep.ok = false;
      rep.mismatches.push_back("arrow " + std::to_string(a.src) + "->" + std::to_string(a.dst) + " has grade " +
                               std::to_string(a.grade));
    }
    arrow[a.src - 1][a.dst - 1] = true;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool has_ext = rep.ext[i][j] != 0;
      if (has_ext != arrow[i][j]) {
        rep.ok = false;
        rep.mismatches.push_back("Ext^1(S_" + std::to_string(i + 1) + ",S_" + std::to_string(j + 1) +
                                 ") = " + std::to_string(rep.ext[i][j]) +
                                 (arrow[i][j] ? " but the intersection quiver has an arrow"
                                              : " but the intersection quiver has no arrow"));
      }
    }
  return rep;
}

}  // namespace sgon
