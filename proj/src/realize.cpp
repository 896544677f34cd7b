#include "stablegon/realize.hpp"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <deque>
#include <filesystem>
#include <map>
#include <mutex>
#include <random>

#include "stablegon/io.hpp"
#include "stablegon/linalg.hpp"

namespace sgon {

namespace {

const double kPi = std::acos(-1.0);

Rat snap(double v, int bits) {
  double scale = std::ldexp(1.0, bits);
  Rat r(mpz_class(std::to_string(std::llround(v * scale))), mpz_class(1) << bits);
  r.canonicalize();
  return r;
}

}  // namespace

StablePolygon e_reference_polygon(const DynkinType& t) {
  const FormalModel& fm = e_formal_model(t);
  std::vector<Rat> re(fm.n), im(fm.n);
  for (int m = 0; m < fm.n; ++m) {
    double a = 2 * kPi * fm.free_index[m] / fm.h + 0.011;
    re[m] = snap(std::cos(a), 30);
    im[m] = snap(std::sin(a), 30);
  }
  return e_polygon_from_params(t, re, im);
}

const std::vector<PointTriple>& e_reference_triangles(const DynkinType& t) {
  static std::mutex mu;
  static std::map<int, std::vector<PointTriple>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.rank);
  if (it != cache.end()) return it->second;
  auto m = admissible_diagonals(e_reference_polygon(t));
  auto tris = admissible_triangles(m);
  for (auto& tr : tris) {
    int s = sgn(cross(m.point(tr.b) - m.point(tr.a), m.point(tr.c) - m.point(tr.a)));
    if (s == 0) throw std::logic_error("degenerate reference triangle");
    if (s < 0) std::swap(tr.b, tr.c);
  }
  return cache.emplace(t.rank, std::move(tris)).first->second;
}

std::optional<std::string> misoriented_triangle(const StablePolygon& p) {
  if (p.type.family != Family::E) return std::nullopt;
  auto pt = [&](const Endpoint& e) { return e.tag == 'V' ? p.v(e.idx) : p.w(e.idx); };
  for (const auto& tr : e_reference_triangles(p.type))
    if (sgn(cross(pt(tr.b) - pt(tr.a), pt(tr.c) - pt(tr.a))) <= 0)
      return "triangle " + tr.a.str() + tr.b.str() + tr.c.str() + " is not counterclockwise";
  return std::nullopt;
}

bool certifies(const StablePolygon& p, const DynkinQuiver& q, std::string* why) {
  if (!(p.type == q.type)) {
    if (why) *why = "type mismatch";
    return false;
  }
  auto st = is_stable(p);
  if (!st.stable) {
    if (why) *why = st.clause + ": " + st.failure;
    return false;
  }
  if (auto bad = misoriented_triangle(p)) {
    if (why) *why = "triangle orientation: " + *bad;
    return false;
  }
  try {
    auto a = stability_function(p);
    auto r = realized_quiver(a);
    if (!(r == q)) {
      if (why) *why = "quiver mismatch: realized " + r.sign_string() + ", wanted " + q.sign_string();
      return false;
    }
  } catch (const DiagonalError& e) {
    if (why) *why = e.what();
    return false;
  }
  return true;
}

StablePolygon realize_A(const DynkinQuiver& q) {
  const DynkinType& t = q.type;
  if (t.family != Family::A) throw std::invalid_argument("realize_A needs type A");
  int n = t.rank;
  RatPoint bottom{0, -1}, top{0, 1};
  if (n == 1) return validate_relations(t, {bottom, top});
  for (int bits = 8; bits <= 48; bits += 4) {
    std::vector<RatPoint> right, left;
    for (int i = 2; i <= n; ++i) {
      Rat y = Rat(-1) + Rat(2 * (i - 1), n);
      y.canonicalize();
      double yd = y.get_d();
      Rat x = snap(std::sqrt(1 - yd * yd), bits);
      if (q.eps[i - 2] > 0)
        left.push_back({-x, y});
      else
        right.push_back({x, y});
    }
    std::vector<RatPoint> v{bottom};
    v.insert(v.end(), right.begin(), right.end());
    v.push_back(top);
    v.insert(v.end(), left.rbegin(), left.rend());
    StablePolygon p = validate_relations(t, v);
    if (certifies(p, q)) return p;
  }
  throw std::logic_error("realize_A failed to certify " + q.sign_string());
}

namespace {

// vertices around the origin in CCW order starting at arg 0
std::vector<RatPoint> ccw_order(std::vector<RatPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatPoint& a, const RatPoint& b) {
    return cmp_arg({a.x, a.y}, {b.x, b.y}) == Order::Less;
  });
  return pts;
}

// case (a) when eps_{n-1} = eps_n, else case (b) layout with B on the y-axis at +-r
StablePolygon build_D(const DynkinType& t, const std::vector<int>& e, int bits, const Rat& r) {
  int n = t.rank;
  auto circ = [&](int i, int sign) {
    Rat y(i, n);
    y.canonicalize();
    double yd = y.get_d();
    Rat x = snap(std::sqrt(1 - yd * yd), bits);
    return RatPoint{sign * x, y};
  };
  std::vector<RatPoint> up{{0, 1}};
  for (int i = 3; i <= n - 1; ++i) up.push_back(circ(i, e[n + 1 - i]));
  bool case_a = e[n - 1] == e[n];
  if (case_a)
    up.push_back(circ(2, e[n - 1]));
  else
    up.push_back({1, 0});
  std::vector<RatPoint> all = up;
  for (const auto& p : up) all.push_back({-p.x, -p.y});
  std::vector<RatPoint> b;
  if (case_a)
    b = {{0, 0}, {0, 0}};
  else
    b = {{0, -r}, {0, r}};
  return validate_relations(t, ccw_order(all), b);
}

// eps_i for i = 2..n indexed directly
std::vector<int> d_eps(const DynkinQuiver& q) {
  int n = q.rank();
  std::vector<int> e(n + 1, 0);
  for (int i = 2; i <= n - 1; ++i) e[i] = q.eps[i - 2];
  e[n] = q.eps[n - 2];
  return e;
}

Rat inner_radius_guess(const StablePolygon& p) {
  int n = p.type.rank, h = p.h();
  Rat best = -1;
  for (int j = 0; j < h; ++j) {
    RatVec d = p.v(j + n - 2) - p.v(j);
    Rat c = cross(d, RatVec{-p.v(j).x, -p.v(j).y});
    Rat dist2 = c * c / dot(d, d);
    if (best < 0 || dist2 < best) best = dist2;
  }
  return snap(2.0 / 3.0 * std::sqrt(best.get_d()), 20);
}

StablePolygon realize_D_case_b(const DynkinQuiver& q, const std::vector<int>& e) {
  for (int bits = 10; bits <= 40; bits += 6) {
    StablePolygon probe = build_D(q.type, e, bits, Rat(1, 1000));
    Rat r = inner_radius_guess(probe);
    for (int k = 0; k < 30; ++k, r /= 2) {
      StablePolygon p = build_D(q.type, e, bits, r);
      if (certifies(p, q)) return p;
    }
  }
  throw std::logic_error("realize_D failed to certify " + q.sign_string());
}

}  // namespace

StablePolygon realize_D(const DynkinQuiver& q) {
  if (q.type.family != Family::D) throw std::invalid_argument("realize_D needs type D");
  int n = q.rank();
  auto e = d_eps(q);
  if (e[n - 1] == e[n]) {
    for (int bits = 10; bits <= 40; bits += 6) {
      StablePolygon p = build_D(q.type, e, bits, 0);
      if (certifies(p, q)) return p;
    }
    throw std::logic_error("realize_D failed to certify " + q.sign_string());
  }
  if (e[n - 1] < 0) return realize_D_case_b(q, e);
  DynkinQuiver qb = q;
  qb.eps[n - 3] = -1;
  qb.eps[n - 2] = 1;
  auto eb = d_eps(qb);
  StablePolygon base = realize_D_case_b(qb, eb);
  for (Rat t(-1, 8); t < Rat(-1, 1 << 30); t /= 2) {
    StablePolygon p = rotate_rational(base, t);
    if (certifies(p, q)) return p;
  }
  throw std::logic_error("realize_D rotation failed for " + q.sign_string());
}

StablePolygon realize_D_mirrored(const DynkinQuiver& q) {
  StablePolygon p = mirror(realize_D(q.opposite()));
  std::string why;
  if (!certifies(p, q, &why)) throw std::logic_error("mirrored D realization failed: " + why);
  return p;
}

StablePolygon e_polygon_from_params(const DynkinType& t, const std::vector<Rat>& re, const std::vector<Rat>& im) {
  const FormalModel& fm = e_formal_model(t);
  std::vector<RatPoint> v(fm.h);
  for (int j = 0; j < fm.h; ++j) {
    Rat x = 0, y = 0;
    for (int m = 0; m < fm.n; ++m) {
      if (sgn(fm.V[j][m]) == 0) continue;
      x += fm.V[j][m] * re[m];
      y += fm.V[j][m] * im[m];
    }
    v[j] = {x, y};
  }
  return validate_relations(t, v);
}

namespace {

// numeric view of the formal model for the optimizer
struct ENum {
  DynkinType t;
  int n = 0, h = 0;
  std::vector<double> MV, MW;  // h x n
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> nbr;
  std::vector<std::array<int, 3>> tri;  // V_j -> j, W_j -> h + j
};

const ENum& enumeric(const DynkinType& t) {
  static std::mutex mu;
  static std::map<int, ENum> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.rank);
  if (it != cache.end()) return it->second;
  const FormalModel& fm = e_formal_model(t);
  ENum e;
  e.t = t;
  e.n = fm.n;
  e.h = fm.h;
  for (int j = 0; j < fm.h; ++j)
    for (int m = 0; m < fm.n; ++m) {
      e.MV.push_back(fm.V[j][m].get_d());
      e.MW.push_back(fm.W[j][m].get_d());
    }
  e.edges = diagram_edges(t);
  e.nbr.assign(e.n + 1, {});
  for (auto [a, b] : e.edges) {
    e.nbr[a].push_back(b);
    e.nbr[b].push_back(a);
  }
  auto idx = [&](const Endpoint& p) { return p.tag == 'V' ? p.idx : e.h + p.idx; };
  for (const auto& tr : e_reference_triangles(t)) e.tri.push_back({idx(tr.a), idx(tr.b), idx(tr.c)});
  return cache.emplace(t.rank, std::move(e)).first->second;
}

using cd = std::complex<double>;

int mask_of(const DynkinQuiver& q) {
  int m = 0;
  for (size_t k = 0; k < q.eps.size(); ++k)
    if (q.eps[k] > 0) m |= 1 << k;
  return m;
}

bool is_sink_or_source(const ENum& e, int mask, int k) {
  bool sink = true, source = true;
  for (size_t i = 0; i < e.edges.size(); ++i) {
    auto [a, b] = e.edges[i];
    if (a != k && b != k) continue;
    int dst = (mask >> i) & 1 ? b : a;
    if (dst == k)
      source = false;
    else
      sink = false;
  }
  return sink || source;
}

int flip_at(const ENum& e, int mask, int k) {
  for (size_t i = 0; i < e.edges.size(); ++i)
    if (e.edges[i].first == k || e.edges[i].second == k) mask ^= 1 << i;
  return mask;
}

std::vector<int> tilt_path(const ENum& e, int from, int to) {
  std::map<int, std::pair<int, int>> prev;
  prev[from] = {-1, 0};
  std::deque<int> queue{from};
  while (!queue.empty()) {
    int o = queue.front();
    queue.pop_front();
    if (o == to) break;
    for (int k = 1; k <= e.n; ++k) {
      if (!is_sink_or_source(e, o, k)) continue;
      int o2 = flip_at(e, o, k);
      if (!prev.count(o2)) {
        prev[o2] = {o, k};
        queue.push_back(o2);
      }
    }
  }
  std::vector<int> path;
  for (int o = to; prev.at(o).first >= 0; o = prev[o].first) path.push_back(prev[o].second);
  std::reverse(path.begin(), path.end());
  return path;
}

struct Start {
  int orient = 0;
  std::vector<double> x;  // re then im
  std::vector<double> A;  // n x n charges of the simples
};

std::vector<double> charge_matrix(const PolygonAnalysis& a) {
  std::vector<double> A;
  for (int c : a.simple.cls)
    for (const auto& v : a.model.formal[c]) A.push_back(v.get_d());
  return A;
}

StablePolygon polygon_from_x(const ENum& e, const std::vector<double>& x, int bits) {
  std::vector<Rat> re(e.n), im(e.n);
  for (int m = 0; m < e.n; ++m) {
    re[m] = snap(x[m], bits);
    im[m] = snap(x[e.n + m], bits);
  }
  return e_polygon_from_params(e.t, re, im);
}

const std::vector<Start>& starts(const ENum& e) {
  static std::mutex mu;
  static std::map<int, std::vector<Start>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e.n);
  if (it != cache.end()) return it->second;
  const FormalModel& fm = e_formal_model(e.t);
  std::vector<Start> out;
  cd w = std::polar(1.0, 2 * kPi / e.h);
  for (int k = 0; k < 12; ++k) {
    double th = k * kPi / 12 + 0.011;
    std::map<int, cd> c{{1, std::polar(1.0, th)}, {e.h - 1, 0.3}};
    if (e.n == 6) {
      c[4] = 0.08 * std::polar(1.0, 0.3);
      c[5] = cd(0, 0.06);
      c[7] = 0.05;
      c[8] = 0.04 * std::polar(1.0, 2.0);
    }
    Start s;
    s.x.assign(2 * e.n, 0);
    for (int m = 0; m < e.n; ++m) {
      cd z = 0;
      for (auto [mode, coef] : c) z += coef * std::pow(w, (double)(fm.free_index[m] * mode));
      s.x[m] = z.real();
      s.x[e.n + m] = z.imag();
    }
    StablePolygon p = polygon_from_x(e, s.x, 30);
    if (!is_stable(p).stable) continue;
    try {
      auto a = stability_function(p);
      s.orient = mask_of(realized_quiver(a));
      s.A = charge_matrix(a);
    } catch (const DiagonalError&) {
      continue;
    }
    out.push_back(std::move(s));
  }
  return cache.emplace(e.n, std::move(out)).first->second;
}

struct Problem {
  const ENum* e;
  std::vector<double> Aeff;
  int target;
  bool leaf;
  double tau;
};

double cross2(cd a, cd b) { return (std::conj(a) * b).imag(); }

std::vector<double> margins(const Problem& pr, const double* x) {
  const ENum& e = *pr.e;
  int n = e.n, h = e.h, s = n - 3;
  std::vector<cd> c(n), V(h), W(h), Z(n);
  for (int m = 0; m < n; ++m) c[m] = cd(x[m], x[n + m]);
  double sc = 0;
  for (int j = 0; j < h; ++j) {
    cd v = 0, wv = 0;
    for (int m = 0; m < n; ++m) {
      v += e.MV[j * n + m] * c[m];
      wv += e.MW[j * n + m] * c[m];
    }
    V[j] = v;
    W[j] = wv;
    sc += std::abs(v);
  }
  sc /= h;
  sc = sc * sc;
  std::vector<double> out;
  out.reserve(h * h * 2 + 3 * n);
  for (int j = 0; j < h; ++j) {
    cd a = V[(j - 1 + h) % h], d = V[j] - a;
    for (int k = 0; k < h; ++k) {
      if (k == j || k == (j - 1 + h) % h) continue;
      out.push_back(3 * cross2(d, V[k] - a) / sc);
    }
  }
  for (int k = 0; k < h; ++k) {
    cd a = V[k], d = V[(k + s) % h] - a;
    for (int j = 0; j < h; ++j) out.push_back(3 * cross2(d, W[j] - a) / sc);
  }
  auto pt = [&](int i) { return i < h ? V[i] : W[i - h]; };
  for (const auto& tr : e.tri) out.push_back(3 * cross2(pt(tr[1]) - pt(tr[0]), pt(tr[2]) - pt(tr[0])) / sc);
  for (int i = 0; i < n; ++i) {
    cd z = 0;
    for (int m = 0; m < n; ++m) z += pr.Aeff[i * n + m] * c[m];
    Z[i] = z;
    out.push_back(z.imag() / std::abs(z));
  }
  for (size_t i = 0; i < e.edges.size(); ++i) {
    auto [a, b] = e.edges[i];
    cd za = Z[a - 1], zb = Z[b - 1];
    double d = std::abs(za) * std::abs(zb);
    out.push_back(((pr.target >> i) & 1 ? cross2(zb, za) : cross2(za, zb)) / d);
  }
  if (pr.leaf)
    for (int l : {1, 3, n}) out.push_back(0.03 * kPi - std::arg(Z[l - 1]));
  return out;
}

double objective(const Problem& pr, const double* x) {
  auto m = margins(pr, x);
  double mx = -1e300;
  for (double v : m) mx = std::max(mx, -pr.tau * v);
  double s = 0;
  for (double v : m) s += std::exp(-pr.tau * v - mx);
  return (mx + std::log(s)) / pr.tau;
}

double gsl_f(const gsl_vector* v, void* p) { return objective(*static_cast<Problem*>(p), v->data); }

void gsl_df(const gsl_vector* v, void* p, gsl_vector* g) {
  const Problem& pr = *static_cast<Problem*>(p);
  size_t N = v->size;
  std::vector<double> x(v->data, v->data + N);
  for (size_t i = 0; i < N; ++i) {
    double step = 1e-7 * std::max(1.0, std::abs(x[i]));
    double xi = x[i];
    x[i] = xi + step;
    double fp = objective(pr, x.data());
    x[i] = xi - step;
    double fm = objective(pr, x.data());
    x[i] = xi;
    gsl_vector_set(g, i, (fp - fm) / (2 * step));
  }
}

void gsl_fdf(const gsl_vector* v, void* p, double* f, gsl_vector* g) {
  *f = gsl_f(v, p);
  gsl_df(v, p, g);
}

std::vector<double> minimize(Problem& pr, std::vector<double> x) {
  size_t N = x.size();
  gsl_multimin_function_fdf fn;
  fn.n = N;
  fn.f = gsl_f;
  fn.df = gsl_df;
  fn.fdf = gsl_fdf;
  fn.params = &pr;
  gsl_vector* v = gsl_vector_alloc(N);
  for (size_t i = 0; i < N; ++i) gsl_vector_set(v, i, x[i]);
  gsl_multimin_fdfminimizer* s = gsl_multimin_fdfminimizer_alloc(gsl_multimin_fdfminimizer_vector_bfgs2, N);
  gsl_multimin_fdfminimizer_set(s, &fn, v, 0.01, 0.1);
  for (int it = 0; it < 500; ++it) {
    if (gsl_multimin_fdfminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_gradient(s->gradient, 1e-9) == GSL_SUCCESS) break;
  }
  for (size_t i = 0; i < N; ++i) x[i] = gsl_vector_get(s->x, i);
  gsl_multimin_fdfminimizer_free(s);
  gsl_vector_free(v);
  return x;
}

std::string cache_path(const SearchConfig& cfg, const std::string& name) {
  std::string dir = cfg.cache_dir.empty() ? std::string(STABLEGON_FIXTURE_DIR) : cfg.cache_dir;
  return dir + "/" + name + ".json";
}

std::optional<StablePolygon> cache_load(const SearchConfig& cfg, const std::string& name, const DynkinQuiver& q) {
  if (!cfg.use_cache) return std::nullopt;
  std::string path = cache_path(cfg, name);
  if (!std::filesystem::exists(path)) return std::nullopt;
  try {
    StablePolygon p = polygon_from_json(read_json_file(path));
    if (certifies(p, q)) return p;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

void cache_store(const SearchConfig& cfg, const std::string& name, const StablePolygon& p) {
  if (!cfg.use_cache) return;
  std::string path = cache_path(cfg, name);
  std::error_code ec;
  auto dir = std::filesystem::path(path).parent_path();
  if (!std::filesystem::is_directory(dir, ec)) return;
  try {
    write_text_file(path, polygon_to_json(p).dump(1) + "\n");
  } catch (const std::exception&) {
  }
}

std::vector<std::vector<Rat>> simple_charge_rows(const PolygonAnalysis& a) {
  std::vector<std::vector<Rat>> A;
  for (int c : a.simple.cls) A.push_back(a.model.formal[c]);
  return A;
}

// exact leaf deformation: Z(S_l) -> Re - i t Im for every l in leaves
StablePolygon deform_leaves(const StablePolygon& p, const std::vector<int>& leaves, const DynkinQuiver& target) {
  RatPoint o = p.centroid();
  StablePolygon centered = translate(p, {-o.x, -o.y});
  auto a = stability_function(centered);
  auto A = simple_charge_rows(a);
  int n = p.type.rank;
  for (Rat t = 1; t > Rat(1, 1 << 24); t /= 2) {
    std::vector<Rat> zx(n), zy(n);
    for (int i = 0; i < n; ++i) {
      zx[i] = a.Z.Z[i].dx;
      zy[i] = a.Z.Z[i].dy;
    }
    for (int l : leaves) zy[l - 1] = -t * zy[l - 1];
    auto re = solve(A, zx), im = solve(A, zy);
    if (!re || !im) throw CannotDeform("singular charge matrix");
    StablePolygon q;
    try {
      q = translate(e_polygon_from_params(p.type, *re, *im), {o.x, o.y});
    } catch (const PolygonError&) {
      continue;
    }
    if (certifies(q, target)) return q;
  }
  throw CannotDeform("no certified leaf deformation step");
}

}  // namespace

StablePolygon search_stable_E(const DynkinQuiver& q, bool leaf_args, const SearchConfig& cfg) {
  if (q.type.family != Family::E) throw std::invalid_argument("search_stable_E needs type E");
  const ENum& e = enumeric(q.type);
  int n = e.n;
  int target = mask_of(q);
  const auto& st = starts(e);
  if (st.empty()) throw SearchExhausted("no stable start polygon");
  std::vector<std::pair<size_t, std::vector<int>>> order;
  for (size_t i = 0; i < st.size(); ++i) order.push_back({i, tilt_path(e, st[i].orient, target)});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  std::mt19937_64 rng(cfg.seed * 1000003ULL + (std::uint64_t)target * 131ULL + (leaf_args ? 7 : 0));
  std::normal_distribution<double> gauss(0.0, 0.05);
  int tried = 0;
  for (const auto& [si, path] : order) {
    const Start& s0 = st[si];
    std::vector<std::vector<int>> S(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) S[i][i] = 1;
    for (int k : path) {
      auto Sk = S[k - 1];
      for (int j : e.nbr[k])
        for (int m = 0; m < n; ++m) S[j - 1][m] += Sk[m];
      for (int m = 0; m < n; ++m) S[k - 1][m] = -Sk[m];
    }
    Problem pr{&e, std::vector<double>(n * n, 0.0), target, leaf_args, 30};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) pr.Aeff[i * n + m] += S[i][k] * s0.A[k * n + m];
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (++tried > cfg.max_candidates) break;
      std::vector<double> x = s0.x;
      if (attempt > 0)
        for (auto& v : x) v += gauss(rng);
      for (double tau : {30.0, 100.0, 400.0, 1500.0}) {
        pr.tau = tau;
        x = minimize(pr, x);
      }
      auto mg = margins(pr, x.data());
      if (*std::min_element(mg.begin(), mg.end()) <= 0) continue;
      for (int bits = 16; bits <= cfg.max_denominator_bits; bits += 4) {
        StablePolygon p;
        try {
          p = polygon_from_x(e, x, bits);
        } catch (const PolygonError&) {
          continue;
        }
        if (certifies(p, q)) return p;
      }
    }
    if (tried > cfg.max_candidates) break;
  }
  throw SearchExhausted("search exhausted for " + q.type.name() + " " + q.sign_string() + " (seed " +
                        std::to_string(cfg.seed) + ", " + std::to_string(tried) + " candidates)");
}

StablePolygon deform_leaf(const StablePolygon& p, int leaf, int direction) {
  int n = p.type.rank;
  if (p.type.family != Family::E || (leaf != 1 && leaf != 3 && leaf != n))
    throw std::invalid_argument("deform_leaf: leaf must be 1, 3 or n of an E type");
  auto a = stability_function(p);
  int re = sgn(a.Z.Z[leaf - 1].dx);
  if ((direction > 0 && re <= 0) || (direction < 0 && re >= 0))
    throw CannotDeform("leaf simple is not on the requested side");
  DynkinQuiver target = realized_quiver(a);
  int edge = leaf == 1 ? 0 : (leaf == 3 ? 2 : n - 2);
  target.eps[edge] = -target.eps[edge];
  return deform_leaves(p, {leaf}, target);
}

StablePolygon realize_E(const DynkinQuiver& q, const SearchConfig& cfg) {
  if (q.type.family != Family::E) throw std::invalid_argument("realize_E needs type E");
  int n = q.rank();
  bool use_mirror = q.eps[1] > 0;
  DynkinQuiver qq = use_mirror ? q.opposite() : q;
  DynkinQuiver base_q = qq;
  base_q.eps[0] = -1;
  base_q.eps[2] = -1;
  base_q.eps[n - 2] = 1;
  std::string base_name = q.type.name() + "_base_" + base_q.sign_string();
  StablePolygon base;
  if (auto c = cache_load(cfg, base_name, base_q)) {
    base = *c;
  } else {
    base = search_stable_E(base_q, true, cfg);
    cache_store(cfg, base_name, base);
  }
  std::vector<int> leaves;
  if (qq.eps[0] != base_q.eps[0]) leaves.push_back(1);
  if (qq.eps[2] != base_q.eps[2]) leaves.push_back(3);
  if (qq.eps[n - 2] != base_q.eps[n - 2]) leaves.push_back(n);
  std::optional<StablePolygon> p;
  if (leaves.empty()) {
    p = base;
  } else {
    try {
      p = deform_leaves(base, leaves, qq);
    } catch (const CannotDeform&) {
    }
  }
  if (p) {
    StablePolygon out = use_mirror ? mirror(*p) : *p;
    if (certifies(out, q)) return out;
  }
  std::string direct_name = q.type.name() + "_direct_" + q.sign_string();
  if (auto c = cache_load(cfg, direct_name, q)) return *c;
  StablePolygon d = search_stable_E(q, false, cfg);
  cache_store(cfg, direct_name, d);
  return d;
}

StablePolygon realize(const DynkinQuiver& q, const SearchConfig& cfg) {
  switch (q.type.family) {
    case Family::A: return realize_A(q);
    case Family::D: return realize_D(q);
    case Family::E: return realize_E(q, cfg);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace sgon
