#include "rltlab/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rltlab {

std::vector<int> rref(std::vector<RatVector>& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const std::size_t rows = M.size();
  const std::size_t cols = M[0].size();
  for (const auto& row : M)
    if (row.size() != cols) throw std::invalid_argument("rref: ragged matrix");

  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t sel = lead;
    while (sel < rows && M[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(M[sel], M[lead]);
    const Rational inv = Rational(1) / M[lead][col];
    for (std::size_t c = col; c < cols; ++c) M[lead][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || M[r][col] == 0) continue;
      const Rational factor = M[r][col];
      for (std::size_t c = col; c < cols; ++c) M[r][c] -= factor * M[lead][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  return pivots;
}

std::optional<RatVector> solve_unique(std::vector<RatVector> A, RatVector b) {
  if (A.size() != b.size()) throw std::invalid_argument("solve_unique: size mismatch");
  if (A.empty()) return std::nullopt;
  const std::size_t n = A[0].size();
  for (std::size_t r = 0; r < A.size(); ++r) A[r].push_back(b[r]);
  const std::vector<int> pivots = rref(A);
  // Inconsistent when some pivot lands in the augmented column.
  for (int p : pivots)
    if (static_cast<std::size_t>(p) == n) return std::nullopt;
  if (pivots.size() != n) return std::nullopt;  // underdetermined
  RatVector x(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) x[pivots[k]] = A[k][n];
  return x;
}

std::vector<RatVector> nullspace(std::vector<RatVector> M) {
  std::vector<RatVector> basis;
  if (M.empty()) return basis;
  const std::size_t cols = M[0].size();
  const std::vector<int> pivots = rref(M);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector a(cols, Rational(0));
    a[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) a[pivots[k]] = -M[k][f];
    basis.push_back(std::move(a));
  }
  return basis;
}

std::size_t rank(std::vector<RatVector> M) { return rref(M).size(); }

}  // namespace rltlab
