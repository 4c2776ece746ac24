#include "desargues/linalg.hpp"

namespace desargues {

std::vector<int> echelonize(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    for (size_t j = 0; j < m.size(); ++j) {
      if (j == row || m[j][col].is_zero()) continue;
      // Cross-multiplied update keeps entries in the entry field exactly.
      Scalar f = m[j][col];
      Scalar g = m[row][col];
      for (size_t k = 0; k < cols; ++k) m[j][k] = g * m[j][k] - f * m[row][k];
      canonicalize(std::span<Scalar>(m[j]), /*allow_zero=*/true);
    }
    canonicalize(std::span<Scalar>(m[row]), /*allow_zero=*/true);
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(echelonize(m).size()); }

std::vector<std::vector<Scalar>> null_space(Matrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = Scalar(1);
    // Echelon rows are mutually independent; solve each pivot entry directly.
    for (size_t r = 0; r < pivots.size(); ++r) {
      int pc = pivots[r];
      Scalar rhs(0);
      for (size_t k = pc + 1; k < cols; ++k)
        if (!v[k].is_zero()) rhs = rhs + m[r][k] * v[k];
      v[pc] = -rhs / m[r][pc];
    }
    canonicalize(std::span<Scalar>(v));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace desargues
