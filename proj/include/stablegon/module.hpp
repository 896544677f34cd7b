#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stablegon/diagonals.hpp"
#include "stablegon/dynkin.hpp"
#include "stablegon/linalg.hpp"

namespace sgon {

struct Representation {
  DynkinQuiver quiver;
  DimVector dim;
  std::vector<RatMatrix> mats;  // per canonical edge, dim[dst] x dim[src]

  static Representation simple(const DynkinQuiver& q, int vertex);
  static Representation zero(const DynkinQuiver& q);
  bool is_zero() const { return total_dim(dim) == 0; }
  // throws std::logic_error on a shape mismatch
  void check_shapes() const;
};

// per-vertex maps, f[v] is dim N_v x dim M_v (vertices 0-based)
using RepMap = std::vector<RatMatrix>;

// reflection at a source k (cokernel) or a sink k (kernel); vertex 1-based
Representation reflect_at_source(const Representation& m, int k);
Representation reflect_at_sink(const Representation& m, int k);

// one representation per positive root; from_sinks builds preprojectives, otherwise preinjectives
std::map<DimVector, Representation> indecomposables(const DynkinQuiver& q, bool from_sinks = true);

std::vector<RepMap> hom_space(const Representation& m, const Representation& n);
int hom_dim(const Representation& m, const Representation& n);
// Hom dimension over F_p, p = 2^31 - 1; an upper bound for the rational dimension
int hom_dim_mod_p(const Representation& m, const Representation& n);
int ext1_dim(const Representation& m, const Representation& n);

struct EmbedResult {
  bool embeds = false;
  std::optional<RepMap> certificate;  // injective at every vertex, checked exactly
  int best_rank = 0;                  // largest total rank seen
  std::string note;
};

EmbedResult embeds(const Representation& m, const Representation& n, int trials = 32, std::uint64_t seed = 0);
bool is_injective(const Representation& m, const Representation& n, const RepMap& f);
bool is_hom(const Representation& m, const Representation& n, const RepMap& f);

struct PairRecord {
  DimVector sub, root;
  Order phase = Order::Equal;  // phase(sub) vs phase(root)
  bool embedding_checked = false;
  bool embeds = false;
  bool violation = false;
};

struct TotalStabilityReport {
  bool verdict = true;
  std::vector<PairRecord> log;
  std::optional<PairRecord> counterexample;
  std::optional<RepMap> counterexample_map;
  int embedding_checks = 0;
  std::string note;
};

// every indecomposable is Z-stable, tested against indecomposable submodules
TotalStabilityReport check_total_stability(const DynkinQuiver& q, const StabilityFunction& z, int trials = 32,
                                           std::uint64_t seed = 0);

struct ExtQuiverReport {
  bool ok = true;
  std::vector<std::vector<int>> ext;  // ext[i][j] = dim Ext^1(S_{i+1}, S_{j+1})
  std::vector<std::string> mismatches;
};

ExtQuiverReport ext_quiver_check(const DynkinQuiver& q, const IntersectionQuiver& iq);

}  // namespace sgon
