#include "stablegon/linalg.hpp"

namespace sgon {

RatMatrix zeros(size_t rows, size_t cols) { return RatMatrix(rows, std::vector<Rat>(cols, Rat(0))); }

std::vector<size_t> rref(RatMatrix& m, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t p = row;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rat inv = 1 / m[row][c];
    for (size_t k = c; k < m[row].size(); ++k) m[row][k] *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c];
      for (size_t k = c; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

size_t rank(RatMatrix m, size_t cols) { return rref(m, cols).size(); }

std::vector<std::vector<Rat>> nullspace(RatMatrix m, size_t cols) {
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b) {
  size_t n = a.size();
  RatMatrix m = a;
  for (size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  auto piv = rref(m, n);
  if (piv.size() != n) return std::nullopt;
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b, size_t inner, size_t cols) {
  RatMatrix c = zeros(a.size(), cols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

}  // namespace sgon
