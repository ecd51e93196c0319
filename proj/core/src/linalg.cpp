#include "mixdisc/linalg.hpp"

namespace mixdisc {

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(lead, c));
    const Rational inv = m(lead, col).inverse();
    for (std::size_t c = col; c < cols; ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) {
        if (!m(lead, c).is_zero()) m(r, c) -= factor * m(lead, c);
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Congruence congruence_diagonalize(const RationalMatrix& input) {
  if (!input.is_square()) throw InputError("symmetric_matrix", "congruence of a non-square matrix");
  if (!(input == input.transpose())) throw InputError("symmetric_matrix", "congruence of a non-symmetric matrix");

  const std::size_t n = input.rows();
  RationalMatrix m = input;
  RationalMatrix t = RationalMatrix::identity(n);

  auto swap_index = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(m(a, k), m(b, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(m(k, a), m(k, b));
    for (std::size_t k = 0; k < n; ++k) std::swap(t(k, a), t(k, b));
  };
  // index i += index j on both sides: M <- Eᵀ M E with E = I + e_j e_iᵀ.
  auto add_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) m(i, k) += m(j, k);
    for (std::size_t k = 0; k < n; ++k) m(k, i) += m(k, j);
    for (std::size_t k = 0; k < n; ++k) t(k, i) += t(k, j);
  };

  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pivot = n;
    for (std::size_t i = p; i < n; ++i) {
      if (!m(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      for (std::size_t i = p; i < n && pivot == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!m(i, j).is_zero()) {
            add_index(i, j);
            pivot = i;
            break;
          }
        }
      }
      if (pivot == n) break;  // remaining block is zero
    }
    swap_index(p, pivot);

    const Rational inv = m(p, p).inverse();
    for (std::size_t r = p + 1; r < n; ++r) {
      if (m(r, p).is_zero()) continue;
      const Rational f = m(r, p) * inv;
      for (std::size_t k = p; k < n; ++k) m(r, k) -= f * m(p, k);
      for (std::size_t k = p; k < n; ++k) m(k, r) -= f * m(k, p);
      for (std::size_t k = 0; k < n; ++k) t(k, r) -= f * t(k, p);
    }
  }

  Congruence out;
  out.diagonal.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(m(i, i));
  out.transform = std::move(t);
  return out;
}

}  // namespace mixdisc
