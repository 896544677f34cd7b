#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "stablegon/io.hpp"
#include "stablegon/realize.hpp"
#include "stablegon/report.hpp"

using namespace sgon;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kExhausted = 3 };

struct Input {
  std::string path, text;
  json doc;
};

Input load(const std::string& path) {
  Input in;
  in.path = path;
  try {
    in.text = read_text_file(path);
    in.doc = json::parse(in.text);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return in;
}

json header(const std::string& command, const std::vector<const Input*>& inputs) {
  json h;
  h["tool"] = "stablegon";
  h["version"] = kVersion;
  h["command"] = command;
  json hashes = json::object();
  for (const Input* in : inputs) hashes[std::filesystem::path(in->path).filename().string()] = sha256_hex(in->text);
  h["inputs"] = hashes;
  return h;
}

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_text_file(out, j.dump(2) + "\n");
}

StablePolygon load_polygon(const Input& in) {
  try {
    return polygon_from_json(in.doc);
  } catch (const PolygonError& e) {
    throw InputError(e.what());
  }
}

int cmd_realize(const std::string& qpath, const std::string& out, const std::string& svg, std::uint64_t seed,
                const std::string& cache, bool no_cache) {
  Input in = load(qpath);
  DynkinQuiver q = quiver_from_json(in.doc);
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.cache_dir = cache;
  cfg.use_cache = !no_cache;
  StablePolygon p = realize(q, cfg);
  std::string why;
  if (!certifies(p, q, &why)) {
    std::cerr << "realized polygon failed certification: " << why << "\n";
    return kFailed;
  }
  write_text_file(out, polygon_to_json(p).dump(2) + "\n");
  if (!svg.empty()) write_text_file(svg, render_svg(p));
  return kOk;
}

int cmd_verify(const std::string& ppath, const std::string& against, const std::string& report) {
  Input in = load(ppath);
  std::optional<Input> qin;
  std::optional<DynkinQuiver> target;
  if (!against.empty()) {
    qin = load(against);
    target = quiver_from_json(qin->doc);
  }
  RawPolygon raw = raw_polygon_from_json(in.doc);
  if (target && !(target->type == raw.type)) throw InputError("quiver type differs from polygon type");
  VerifyOutcome v = verify_polygon(raw, target);
  std::vector<const Input*> ins{&in};
  if (qin) ins.push_back(&*qin);
  json r = header("verify", ins);
  r["type"] = raw.type.name();
  r["steps"] = v.report["steps"];
  r["verdict"] = v.ok;
  emit(r, report);
  if (!v.ok) {
    for (const auto& s : r["steps"])
      if (!s["pass"].get<bool>()) {
        std::cerr << "verification failed at step '" << s["step"].get<std::string>() << "'";
        const json& d = s["detail"];
        if (d.contains("clause")) std::cerr << " (" << d["clause"].get<std::string>() << ")";
        if (d.contains("failure")) std::cerr << ": " << d["failure"].get<std::string>();
        std::cerr << "\n";
        break;
      }
  }
  return v.ok ? kOk : kFailed;
}

int cmd_diagonals(const std::string& ppath, const std::string& out) {
  Input in = load(ppath);
  StablePolygon p = load_polygon(in);
  PolygonAnalysis a;
  try {
    a = stability_function(p);
  } catch (const DiagonalError& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  json r = header("diagonals", {&in});
  r["report"] = diagonals_report(a);
  emit(r, out);
  return kOk;
}

int cmd_stability(const std::string& ppath, const std::string& out) {
  Input in = load(ppath);
  StablePolygon p = load_polygon(in);
  PolygonAnalysis a;
  try {
    a = stability_function(p);
  } catch (const DiagonalError& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  DynkinQuiver q = realized_quiver(a);
  auto tot = check_total_stability(q, a.Z);
  json r = header("stability", {&in});
  r["quiver"] = quiver_to_json(q);
  r["report"] = stability_report_json(tot);
  emit(r, out);
  return tot.verdict ? kOk : kFailed;
}

struct DtSide {
  DynkinQuiver q;
  StabilityFunction z;
  std::vector<DimVector> stable;
  json info;
};

// every positive root stable for the polygon charge, ties split by a certified perturbation
std::optional<DtSide> polygon_side(const StablePolygon& p, std::string& why) {
  PolygonAnalysis a = stability_function(p);
  DtSide s;
  s.q = realized_quiver(a);
  s.stable = positive_roots(p.type);
  s.z = separate_phases(a.Z, s.stable);
  bool perturbed = !(s.z.Z == a.Z.Z);
  auto tot = check_total_stability(s.q, s.z);
  if (!tot.verdict) {
    why = "total stability failed for the polygon charge";
    return std::nullopt;
  }
  s.info["source"] = "polygon";
  s.info["perturbed"] = perturbed;
  s.info["total_stability"] = true;
  return s;
}

int cmd_dt(const std::string& ppath, int order, const std::string& compare, const std::string& out) {
  if (order < 1) throw InputError("order must be positive");
  Input in = load(ppath);
  StablePolygon p = load_polygon(in);
  std::string why;
  std::optional<DtSide> a;
  try {
    a = polygon_side(p, why);
  } catch (const DiagonalError& e) {
    why = e.what();
  }
  if (!a) {
    std::cerr << why << "\n";
    return kFailed;
  }
  std::vector<const Input*> ins{&in};
  std::optional<Input> other;
  json r;
  if (compare.empty()) {
    r = header("dt", ins);
    QSeries s = dt_product(a->q, a->z, a->stable, order);
    r["quiver"] = quiver_to_json(a->q);
    r["charge"] = a->info;
    r["factors"] = json::array();
    for (const auto& d : phase_order(a->z, a->stable)) r["factors"].push_back(dim_string(d));
    r["series"] = series_to_json(s);
    emit(r, out);
    return kOk;
  }
  DtSide b;
  if (compare == "source-order") {
    b.q = a->q;
    b.z = source_order_charges(a->q);
    for (int i = 0; i < a->q.rank(); ++i) {
      DimVector e(a->q.rank(), 0);
      e[i] = 1;
      b.stable.push_back(e);
    }
    b.info["source"] = "source-order";
  } else {
    other = load(compare);
    ins.push_back(&*other);
    auto sb = polygon_side(load_polygon(*other), why);
    if (!sb) {
      std::cerr << compare << ": " << why << "\n";
      return kFailed;
    }
    b = *sb;
    if (!(b.q == a->q)) {
      std::cerr << "polygons realize different quivers\n";
      return kFailed;
    }
  }
  auto w = wall_crossing_check(a->q, a->z, a->stable, b.z, b.stable, order);
  r = header("dt", ins);
  r["quiver"] = quiver_to_json(a->q);
  r["order"] = order;
  r["left"] = a->info;
  r["right"] = b.info;
  r["factors"] = {w.factors1, w.factors2};
  r["equal"] = w.equal;
  if (!w.equal) r["first_difference"] = w.first_difference;
  emit(r, out);
  return w.equal ? kOk : kFailed;
}

int cmd_svg(const std::string& ppath, const std::string& out) {
  Input in = load(ppath);
  write_text_file(out, render_svg(load_polygon(in)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stable polygons for Dynkin quivers"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string quiver, polygon, out, svg, against, report, cache, compare;
  std::uint64_t seed = 0;
  bool no_cache = false;
  int order = 0;

  auto* realize = app.add_subcommand("realize", "construct a certified stable polygon for a quiver");
  realize->add_option("--quiver", quiver)->required()->check(CLI::ExistingFile);
  realize->add_option("--out", out)->required();
  realize->add_option("--svg", svg);
  realize->add_option("--seed", seed);
  realize->add_option("--cache", cache, "fixture directory");
  realize->add_flag("--no-cache", no_cache);

  auto* verify = app.add_subcommand("verify", "check a polygon end to end");
  verify->add_option("--polygon", polygon)->required()->check(CLI::ExistingFile);
  verify->add_option("--against", against)->check(CLI::ExistingFile);
  verify->add_option("--report", report)->required();

  auto* diag = app.add_subcommand("diagonals", "list upward diagonal classes");
  diag->add_option("--polygon", polygon)->required()->check(CLI::ExistingFile);
  diag->add_option("--out", out);

  auto* stab = app.add_subcommand("stability", "check total stability of the induced charge");
  stab->add_option("--polygon", polygon)->required()->check(CLI::ExistingFile);
  stab->add_option("--out", out);

  auto* dt = app.add_subcommand("dt", "truncated DT product");
  dt->add_option("--polygon", polygon)->required()->check(CLI::ExistingFile);
  dt->add_option("--order", order)->required();
  dt->add_option("--compare", compare, "source-order or a polygon file");
  dt->add_option("--out", out);

  auto* svgc = app.add_subcommand("svg", "draw a polygon");
  svgc->add_option("--polygon", polygon)->required()->check(CLI::ExistingFile);
  svgc->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*realize) return cmd_realize(quiver, out, svg, seed, cache, no_cache);
    if (*verify) return cmd_verify(polygon, against, report);
    if (*diag) return cmd_diagonals(polygon, out);
    if (*stab) return cmd_stability(polygon, out);
    if (*dt) return cmd_dt(polygon, order, compare, out);
    if (*svgc) return cmd_svg(polygon, out);
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const NonDiscrete& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  }
  return kInvalid;
}
