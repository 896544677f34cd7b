#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgon {

enum class Family { A, D, E };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;
  std::string name() const;
  bool operator==(const DynkinType& o) const { return family == o.family && rank == o.rank; }
};

void validate_type(const DynkinType& t);  // throws std::invalid_argument
int coxeter_number(const DynkinType& t);
int num_positive_roots(const DynkinType& t);
char family_char(Family f);
Family family_from_char(char c);

// canonical edge order of the quiver file format, labels 1..n
std::vector<std::pair<int, int>> diagram_edges(const DynkinType& t);

using DimVector = std::vector<int>;

std::vector<DimVector> positive_roots(const DynkinType& t);

struct Arrow {
  int src = 0, dst = 0;
  bool operator==(const Arrow& o) const { return src == o.src && dst == o.dst; }
  bool operator<(const Arrow& o) const { return src != o.src ? src < o.src : dst < o.dst; }
};

struct DynkinQuiver {
  DynkinType type;
  std::vector<int> eps;  // +1: arrow from smaller label to larger

  int rank() const { return type.rank; }
  std::vector<Arrow> arrows() const;  // in canonical edge order
  DynkinQuiver opposite() const;
  std::string sign_string() const;
  bool operator==(const DynkinQuiver& o) const { return type == o.type && eps == o.eps; }
};

DynkinQuiver make_quiver(const DynkinType& t, const std::string& signs);
// throws std::invalid_argument unless the arrows orient the canonical diagram
DynkinQuiver quiver_from_arrows(const DynkinType& t, const std::vector<Arrow>& arrows);
std::vector<DynkinQuiver> all_orientations(const DynkinType& t);

int euler_form(const DynkinQuiver& q, const DimVector& a, const DimVector& b);
std::vector<std::vector<int>> euler_matrix(const DynkinQuiver& q);
// lambda(i,j) = <e_j,e_i> - <e_i,e_j>, vertices 1-based
int lambda_form(const DynkinQuiver& q, int i, int j);
int lambda_vec(const DynkinQuiver& q, const DimVector& a, const DimVector& b);

// permutations p of 1..n (p[0] unused) preserving the diagram
std::vector<std::vector<int>> diagram_automorphisms(const DynkinType& t);
// automorphism p with {(p(a), p(b))} equal to target's arrows
std::optional<std::vector<int>> match_quiver(const DynkinQuiver& target, const std::vector<Arrow>& arrows);

int total_dim(const DimVector& d);
std::string dim_string(const DimVector& d);

}  // namespace sgon
