#pragma once

#include <optional>
#include <vector>

#include "stablegon/geometry.hpp"

namespace sgon {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix zeros(size_t rows, size_t cols);
// reduced row echelon form in place; returns pivot columns
std::vector<size_t> rref(RatMatrix& m, size_t cols);
size_t rank(RatMatrix m, size_t cols);
// basis of {x : m x = 0}
std::vector<std::vector<Rat>> nullspace(RatMatrix m, size_t cols);
// unique solution of a square system, nullopt if singular
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b, size_t inner, size_t cols);

}  // namespace sgon
