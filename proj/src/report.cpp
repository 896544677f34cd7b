#include "stablegon/report.hpp"

#include <algorithm>
#include <sstream>

#include "stablegon/realize.hpp"

namespace sgon {

const char* const kVersion = "0.3.0";

std::string decimal6(const Rat& r) {
  Rat s = r * 1000000;
  mpz_class a = abs(s.get_num()), b = s.get_den();
  mpz_class q = (2 * a + b) / (2 * b);
  std::string digits = q.get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  if (sgn(r) < 0 && q != 0) out.insert(0, "-");
  return out;
}

json dim_to_json(const DimVector& d) { return json(d); }

json map_to_json(const RepMap& f) {
  json out = json::array();
  for (const auto& m : f) {
    json mat = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& x : row) r.push_back(format_rat(x));
      mat.push_back(r);
    }
    out.push_back(mat);
  }
  return out;
}

namespace {

json vec_json(const RatVec& v) { return json::array({format_rat(v.dx), format_rat(v.dy)}); }

std::string order_str(Order o) { return o == Order::Less ? "<" : (o == Order::Greater ? ">" : "="); }

json step(const std::string& name, bool ok, json detail = json::object()) {
  json j;
  j["step"] = name;
  j["pass"] = ok;
  j["detail"] = std::move(detail);
  return j;
}

}  // namespace

json diagonals_report(const PolygonAnalysis& a) {
  json j = type_to_json(a.model.poly.type);
  std::vector<int> rank(a.model.classes.size(), 0);
  for (size_t i = 0; i < a.phases.size(); ++i) {
    int r = 1;
    for (size_t k = 0; k < a.phases.size(); ++k)
      if (cmp_arg(a.phases[k].vec, a.phases[i].vec) == Order::Greater) ++r;
    rank[a.phases[i].cls] = r;
  }
  json classes = json::array();
  for (const auto& ph : a.phases) {
    const auto& c = a.model.classes[ph.cls];
    json e;
    e["tail"] = c.rep.first.str();
    e["head"] = c.rep.second.str();
    e["vector"] = vec_json(c.vec);
    e["phase_rank"] = rank[ph.cls];
    e["dim"] = dim_to_json(ph.dim);
    e["members"] = (int)c.members.size();
    classes.push_back(e);
  }
  j["count"] = (int)a.phases.size();
  j["classes"] = classes;
  json simples = json::array();
  for (size_t i = 0; i < a.simple.cls.size(); ++i) {
    const auto& c = a.model.classes[a.simple.cls[i]];
    json s;
    s["label"] = "s" + std::to_string(i + 1);
    s["tail"] = c.rep.first.str();
    s["head"] = c.rep.second.str();
    s["vector"] = vec_json(c.vec);
    simples.push_back(s);
  }
  j["simples"] = simples;
  json arrows = json::array();
  for (const auto& ar : a.quiver.arrows) arrows.push_back({{"src", ar.src}, {"dst", ar.dst}, {"grade", ar.grade}});
  j["intersection_quiver"] = arrows;
  return j;
}

json stability_report_json(const TotalStabilityReport& r) {
  json j;
  j["verdict"] = r.verdict;
  j["note"] = r.note;
  j["embedding_checks"] = r.embedding_checks;
  json log = json::array();
  for (const auto& p : r.log) {
    json e;
    e["sub"] = dim_to_json(p.sub);
    e["root"] = dim_to_json(p.root);
    e["phase"] = order_str(p.phase);
    e["embedding_checked"] = p.embedding_checked;
    e["embeds"] = p.embeds;
    e["violation"] = p.violation;
    log.push_back(e);
  }
  j["pairs"] = log;
  if (r.counterexample) {
    json c;
    c["sub"] = dim_to_json(r.counterexample->sub);
    c["root"] = dim_to_json(r.counterexample->root);
    c["phase"] = order_str(r.counterexample->phase);
    if (r.counterexample_map) c["injective_map"] = map_to_json(*r.counterexample_map);
    j["counterexample"] = c;
  }
  return j;
}

json ext_report_json(const ExtQuiverReport& r) {
  json j;
  j["pass"] = r.ok;
  j["ext1"] = r.ext;
  j["mismatches"] = r.mismatches;
  return j;
}

json series_to_json(const QSeries& s) {
  json j;
  j["order"] = s.order;
  json terms = json::object();
  for (const auto& [d, c] : s.terms) terms[dim_string(d)] = c.str("t");
  j["variable"] = "t = q^(1/2)";
  j["terms"] = terms;
  return j;
}

VerifyOutcome verify_polygon(const RawPolygon& raw, const std::optional<DynkinQuiver>& target) {
  VerifyOutcome out;
  json steps = json::array();
  auto finish = [&](bool ok) {
    out.ok = ok;
    out.report["steps"] = steps;
    out.report["verdict"] = ok;
    return out;
  };

  StablePolygon p;
  try {
    p = validate_relations(raw.type, raw.vertices, raw.punctures);
    steps.push_back(step("relations", true));
  } catch (const PolygonError& e) {
    steps.push_back(step("relations", false, {{"failure", e.what()}}));
    return finish(false);
  }

  auto st = is_stable(p);
  {
    json d;
    d["certificate"] = st.certificate;
    if (!st.stable) {
      d["clause"] = st.clause;
      d["failure"] = st.failure;
    }
    steps.push_back(step("stability", st.stable, d));
    if (!st.stable) return finish(false);
  }

  if (p.type.family == Family::E) {
    auto bad = misoriented_triangle(p);
    json d;
    d["triangles"] = (int)e_reference_triangles(p.type).size();
    if (bad) d["failure"] = *bad;
    steps.push_back(step("triangle orientation", !bad, d));
    if (bad) return finish(false);
  }

  PolygonAnalysis a;
  DynkinQuiver realized;
  try {
    a = stability_function(p);
    realized = realized_quiver(a);
  } catch (const DiagonalError& e) {
    steps.push_back(step("intersection quiver", false, {{"failure", e.what()}}));
    return finish(false);
  }
  {
    json d;
    d["classes"] = (int)a.phases.size();
    d["expected_classes"] = num_positive_roots(p.type);
    d["arrows"] = json::array();
    for (const auto& ar : a.quiver.arrows) d["arrows"].push_back({{"src", ar.src}, {"dst", ar.dst}, {"grade", ar.grade}});
    d["realized"] = quiver_to_json(realized);
    d["simple_charges"] = json::array();
    for (const auto& z : a.Z.Z) d["simple_charges"].push_back(vec_json(z));
    steps.push_back(step("intersection quiver", true, d));
  }

  if (target) {
    bool same = *target == realized;
    json d;
    d["target"] = quiver_to_json(*target);
    d["realized"] = quiver_to_json(realized);
    if (!same) d["failure"] = "quiver mismatch";
    steps.push_back(step("target quiver", same, d));
    if (!same) return finish(false);
  }

  bool grades = true;
  for (const auto& ar : a.quiver.arrows)
    if (ar.grade != 1) grades = false;
  steps.push_back(step("degree", grades));

  auto ext = ext_quiver_check(realized, a.quiver);
  steps.push_back(step("ext quiver", ext.ok, ext_report_json(ext)));

  auto tot = check_total_stability(realized, a.Z);
  steps.push_back(step("total stability", tot.verdict, stability_report_json(tot)));

  return finish(grades && ext.ok && tot.verdict);
}

std::string render_svg(const StablePolygon& p) {
  std::vector<RatPoint> pts = p.V;
  for (const auto& b : p.B) pts.push_back(b);
  for (const auto& w : p.W) pts.push_back(w);
  Rat xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& q : pts) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  Rat span = std::max(xmax - xmin, ymax - ymin);
  if (sgn(span) == 0) span = 1;
  Rat pad = span / 10;
  Rat dot = span / 120, thin = span / 400, thick = span / 150;
  auto X = [&](const Rat& x) { return decimal6(x); };
  auto Y = [&](const Rat& y) { return decimal6(-y); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << X(xmin - pad) << " " << Y(ymax + pad) << " "
    << decimal6(xmax - xmin + 2 * pad) << " " << decimal6(ymax - ymin + 2 * pad) << "\">\n";
  s << "<polygon fill=\"none\" stroke=\"#999999\" stroke-width=\"" << decimal6(thin) << "\" points=\"";
  for (size_t i = 0; i < p.V.size(); ++i) s << (i ? " " : "") << X(p.V[i].x) << "," << Y(p.V[i].y);
  s << "\"/>\n";
  try {
    auto a = stability_function(p);
    for (size_t i = 0; i < a.simple.cls.size(); ++i) {
      const auto& c = a.model.classes[a.simple.cls[i]];
      s << "<line stroke=\"#d62728\" stroke-width=\"" << decimal6(thick) << "\" x1=\"" << X(c.tail.x) << "\" y1=\""
        << Y(c.tail.y) << "\" x2=\"" << X(c.head.x) << "\" y2=\"" << Y(c.head.y) << "\"><title>s" << i + 1
        << "</title></line>\n";
    }
  } catch (const DiagonalError&) {
  }
  for (const auto& b : p.B)
    s << "<circle fill=\"#1f77b4\" r=\"" << decimal6(dot) << "\" cx=\"" << X(b.x) << "\" cy=\"" << Y(b.y) << "\"/>\n";
  for (const auto& w : p.W)
    s << "<circle fill=\"#2ca02c\" r=\"" << decimal6(dot) << "\" cx=\"" << X(w.x) << "\" cy=\"" << Y(w.y) << "\"/>\n";
  for (const auto& v : p.V)
    s << "<circle fill=\"#333333\" r=\"" << decimal6(dot) << "\" cx=\"" << X(v.x) << "\" cy=\"" << Y(v.y) << "\"/>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace sgon
