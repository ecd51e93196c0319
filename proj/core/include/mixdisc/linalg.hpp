#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// Exact determinant by Gaussian elimination over the field of T.
/// Throws InputError when `m` is not square. det of a 0x0 matrix is 1.
template <typename T>
T det(Matrix<T> m) {
  if (!m.is_square()) throw InputError("square_matrix", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      result = -result;
    }
    const T& p = m(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const T factor = m(r, col) / p;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (!m(col, c).is_zero()) m(r, c) -= factor * m(col, c);
      }
    }
  }
  return result;
}

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
/// Each basis vector has a 1 in its free column and 0 in the other free columns.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// Exact symmetric congruence diagonalization: transformᵀ · M · transform = diag(diagonal).
struct Congruence {
  RationalVector diagonal;
  RationalMatrix transform;
};

/// Pivoting: first nonzero diagonal entry of the remaining block in index
/// order; if none, the first nonzero off-diagonal (i < j, lexicographic) is
/// moved onto the diagonal by adding row/column j to row/column i.
/// Throws InputError when `m` is not square and symmetric.
Congruence congruence_diagonalize(const RationalMatrix& m);

}  // namespace mixdisc
