#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "stablegon/io.hpp"
#include "stablegon/module.hpp"
#include "stablegon/qseries.hpp"
#include "stablegon/realize.hpp"
#include "stablegon/report.hpp"

using namespace sgon;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Certified {
  DynkinQuiver q;
  StablePolygon p;
};

std::vector<Certified> sweep;

std::vector<Arrow> arrows_of(const IntersectionQuiver& q) {
  auto a = q.ungraded();
  std::sort(a.begin(), a.end());
  return a;
}

DimVector unit(int n, int i) {
  DimVector d(n, 0);
  d[i] = 1;
  return d;
}

std::vector<DimVector> sorted_roots(const DynkinType& t) {
  auto r = positive_roots(t);
  std::sort(r.begin(), r.end());
  return r;
}

Outcome count_law() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<DynkinType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({Family::A, n});
  for (int n = 4; n <= 8; ++n) types.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) types.push_back({Family::E, n});
  for (const auto& t : types) {
    auto q = all_orientations(t).back();
    auto m = admissible_diagonals(realize(q));
    int want = t.rank * coxeter_number(t) / 2;
    if ((int)m.classes.size() != want)
      o.fail(t.name() + ": " + std::to_string(m.classes.size()) + " classes, expected " + std::to_string(want));
  }
  double s = since(t0);
  if (s > 60) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(types.size()) + " types, " + std::to_string(s).substr(0, 5) + " s";
  return o;
}

Outcome realize_and_verify() {
  Outcome o;
  std::vector<DynkinType> ad, e;
  for (int n = 1; n <= 6; ++n) ad.push_back({Family::A, n});
  ad.push_back({Family::D, 4});
  ad.push_back({Family::D, 5});
  for (int n = 6; n <= 8; ++n) e.push_back({Family::E, n});
  int count = 0;
  auto run = [&](const std::vector<DynkinType>& types) {
    for (const auto& t : types)
      for (const auto& q : all_orientations(t)) {
        StablePolygon p;
        try {
          p = realize(q);
        } catch (const std::exception& ex) {
          o.fail(t.name() + " " + q.sign_string() + ": " + ex.what());
          continue;
        }
        auto raw = raw_polygon_from_json(json::parse(polygon_to_json(p).dump()));
        auto v = verify_polygon(raw, q);
        ++count;
        if (!v.ok) {
          std::string step;
          for (const auto& s : v.report["steps"])
            if (!s["pass"].get<bool>()) step = s["step"].get<std::string>();
          o.fail(t.name() + " " + q.sign_string() + " failed at " + step);
          continue;
        }
        sweep.push_back({q, validate_relations(raw.type, raw.vertices, raw.punctures)});
      }
  };
  auto t0 = Clock::now();
  run(ad);
  double tad = since(t0);
  t0 = Clock::now();
  run(e);
  double te = since(t0);
  if (tad > 120) o.fail("A/D suite took " + std::to_string(tad) + " s");
  if (te > 120) o.fail("E suite took " + std::to_string(te) + " s");
  if (o.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d orientations verified, A/D %.1f s, E %.1f s", count, tad, te);
    o.detail = buf;
  }
  return o;
}

Outcome shapes() {
  Outcome o;
  auto hexagon = validate_relations({Family::A, 5}, {{-1, 0}, {1, 0}, {3, 3}, {Rat(7, 2), 7}, {-1, 10}, {-4, 5}});
  auto a = stability_function(hexagon);
  if (a.Z.Z != std::vector<RatVec>{{2, 0}, {2, 3}, {-7, 2}, {Rat(15, 2), 2}, {Rat(-9, 2), 3}})
    o.fail("hexagon simples differ");
  if (arrows_of(a.quiver) != std::vector<Arrow>{{2, 1}, {3, 2}, {3, 4}, {5, 4}}) o.fail("hexagon arrows differ");
  for (const auto& ar : a.quiver.arrows)
    if (ar.grade != 1) o.fail("hexagon arrow with grade " + std::to_string(ar.grade));
  auto q = make_quiver({Family::D, 5}, "-+--");
  auto p = realize(q);
  auto b = stability_function(p);
  if (p.h() != 8) o.fail("D5 polygon is not an octagon");
  if (arrows_of(b.quiver) != std::vector<Arrow>{{2, 1}, {2, 3}, {4, 3}, {5, 3}}) o.fail("octagon arrows differ");
  for (const auto& ar : b.quiver.arrows)
    if (ar.grade != 1) o.fail("octagon arrow with grade " + std::to_string(ar.grade));
  if (o.ok) o.detail = "hexagon and octagon match";
  return o;
}

Outcome decomposition() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::map<std::string, PolygonAnalysis> cache;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + (int)(rng() % 7);
    auto qs = all_orientations({Family::A, n});
    auto q = qs[rng() % qs.size()];
    std::string key = q.type.name() + q.sign_string();
    if (!cache.count(key)) cache[key] = stability_function(realize(q));
    const auto& a = cache[key];
    const auto& m = a.model;
    int c = (int)(rng() % m.classes.size());
    const auto& cls = m.classes[c];
    const auto& order = a.simple.yorder;
    int i = (int)(std::find(order.begin(), order.end(), cls.rep.first) - order.begin());
    int j = (int)(std::find(order.begin(), order.end(), cls.rep.second) - order.begin());
    if (i > j) std::swap(i, j);
    DimVector want(n, 0);
    for (int k = i; k < j; ++k) want[k] = 1;
    DimVector got = decompose(m, a.simple, c);
    if (got != want) o.fail(key + ": " + cls.rep.first.str() + cls.rep.second.str() + " is not a consecutive sum");
    if (a.Z.charge(got) != cls.vec) o.fail(key + ": vector mismatch");
  }
  int e_checked = 0;
  for (const auto& c : sweep) {
    auto a = stability_function(c.p);
    std::vector<DimVector> dims;
    for (const auto& ph : a.phases) {
      dims.push_back(ph.dim);
      if (a.Z.charge(ph.dim) != ph.vec) o.fail(c.q.type.name() + " " + c.q.sign_string() + ": sum of simples differs");
    }
    std::sort(dims.begin(), dims.end());
    if (dims != sorted_roots(c.q.type)) o.fail(c.q.type.name() + " " + c.q.sign_string() + ": not the positive roots");
    if (c.q.type.family == Family::E) {
      std::string why;
      std::vector<DimVector> d0 = decompose_all(a.model, a.simple, 0);
      if (decompose_all(a.model, a.simple, 99991) != d0 || !split_paths_agree(a.model, a.simple, d0, &why))
        o.fail(c.q.type.name() + " " + c.q.sign_string() + ": split paths disagree " + why);
      ++e_checked;
    }
  }
  if (o.ok)
    o.detail = "1000 A diagonals, " + std::to_string(sweep.size()) + " polygons, " + std::to_string(e_checked) +
               " E split checks";
  return o;
}

Outcome degree() {
  Outcome o;
  int arrows = 0;
  for (const auto& c : sweep) {
    auto m = admissible_diagonals(c.p);
    auto s = simples(m);
    for (const auto& ar : essential_intersections(m, s)) {
      if (ar.src == ar.dst) continue;
      ++arrows;
      if (ar.grade != 1)
        o.fail(c.q.type.name() + " " + c.q.sign_string() + ": grade " + std::to_string(ar.grade));
    }
  }
  if (sweep.empty()) o.fail("no certified polygons");
  if (o.ok) o.detail = std::to_string(arrows) + " intersections on " + std::to_string(sweep.size()) + " polygons";
  return o;
}

Outcome mirror_law() {
  Outcome o;
  if (sweep.empty()) {
    o.fail("no certified polygons");
    return o;
  }
  std::mt19937_64 rng(11);
  int relabeled = 0;
  for (int k = 0; k < 100; ++k) {
    const auto& c = sweep[rng() % sweep.size()];
    auto a = stability_function(c.p);
    auto b = stability_function(mirror(c.p));
    std::vector<Arrow> rev;
    for (const auto& ar : arrows_of(a.quiver)) rev.push_back({ar.dst, ar.src});
    std::sort(rev.begin(), rev.end());
    auto opp = quiver_from_arrows(c.q.type, rev);
    auto perm = match_quiver(opp, b.quiver.ungraded());
    if (!perm) {
      o.fail(c.q.type.name() + " " + c.q.sign_string() + ": mirror is not opposite");
      continue;
    }
    if (arrows_of(b.quiver) != rev) ++relabeled;
  }
  if (o.ok) o.detail = "100 polygons, " + std::to_string(relabeled) + " equal only up to a diagram automorphism";
  return o;
}

Outcome dt_identities() {
  Outcome o;
  auto t0 = Clock::now();
  auto a2 = make_quiver({Family::A, 2}, "+");
  int N = 8;
  auto lhs = qdilog(a2, {0, 1}, N) * qdilog(a2, {1, 1}, N) * qdilog(a2, {1, 0}, N);
  auto rhs = qdilog(a2, {1, 0}, N) * qdilog(a2, {0, 1}, N);
  if (!(lhs == rhs)) o.fail("pentagon identity");
  int checks = 0;
  std::vector<std::pair<DynkinType, int>> cases{{{Family::A, 2}, 3}, {{Family::A, 3}, 6}, {{Family::D, 4}, 12}};
  for (const auto& [t, factors] : cases)
    for (const auto& q : all_orientations(t)) {
      auto a = stability_function(realize(q));
      auto z = separate_phases(a.Z, positive_roots(t));
      if (!check_total_stability(q, z).verdict) o.fail(t.name() + " " + q.sign_string() + ": perturbed charge unstable");
      std::vector<DimVector> simp;
      for (int i = 0; i < t.rank; ++i) simp.push_back(unit(t.rank, i));
      auto w = wall_crossing_check(q, z, positive_roots(t), source_order_charges(q), simp, 6);
      if (!w.equal) o.fail(t.name() + " " + q.sign_string() + ": " + w.first_difference);
      if (w.factors1 != factors) o.fail(t.name() + ": " + std::to_string(w.factors1) + " factors");
      ++checks;
    }
  double s = since(t0);
  if (s > 60) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "pentagon at N=8, " + std::to_string(checks) + " wall-crossing checks at N=6";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::vector<RatPoint> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  if (is_positively_convex(cw)) o.fail("clockwise square accepted");
  auto p = realize(make_quiver({Family::D, 5}, "-+--"));
  RatPoint c = p.centroid();
  RatVec far = p.V[0] - c;
  auto bad = validate_relations(p.type, p.V, {c + Rat(2) * far, c - Rat(2) * far});
  auto r = is_stable(bad);
  if (r.stable) o.fail("outside puncture accepted");
  if (r.clause.find("punctures inside level-(n-2)") == std::string::npos) o.fail("clause not named: " + r.clause);
  auto t = check_total_stability(make_quiver({Family::A, 2}, "+"), StabilityFunction{{{1, 1}, {-1, 1}}});
  if (t.verdict) o.fail("swapped phases accepted");
  if (!t.counterexample || t.counterexample->sub != DimVector{0, 1} || t.counterexample->root != DimVector{1, 1})
    o.fail("wrong counterexample");
  if (o.ok) o.detail = "three controls rejected";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"count law", count_law},         {"realize and verify", realize_and_verify}, {"hexagon and octagon", shapes},
      {"decomposition laws", decomposition}, {"degree law", degree},         {"mirror law", mirror_law},
      {"DT identities", dt_identities}, {"negative controls", negative_controls}};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu (%s): %s - %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
