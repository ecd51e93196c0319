#include "mixdisc/mixed_disc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mixdisc/linalg.hpp"

namespace mixdisc {

namespace {

int permutation_sign(const std::vector<std::size_t>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

MatrixTuple::MatrixTuple(std::vector<HermitianMatrix> items) : items_(std::move(items)) {
  const std::size_t n = items_.size();
  if (n == 0) throw InputError("tuple_shape", "matrix tuple must contain n >= 1 matrices");
  for (const auto& a : items_) {
    if (a.dim() != n)
      throw InputError("tuple_shape", "tuple of " + std::to_string(n) + " matrices contains a matrix of dimension " +
                                          std::to_string(a.dim()));
  }
}

GaussianRational polarized_det(std::span<const ComplexMatrix> items) {
  const std::size_t m = items.size();
  if (m == 0) return GaussianRational(1);
  if (m >= 31) throw InputError("dimension", "polarization dimension too large");
  for (const auto& a : items)
    if (a.rows() != m || a.cols() != m) throw InputError("tuple_shape", "polarization needs m matrices of size m×m");

  GaussianRational total;
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  // Gray-code walk: each step adds or removes one matrix from the running sum.
  ComplexMatrix running(m, m);
  std::uint32_t mask = 0;
  for (std::uint32_t step = 1; step <= full; ++step) {
    const std::uint32_t next = step ^ (step >> 1);
    const std::uint32_t changed = next ^ mask;
    const auto k = static_cast<std::size_t>(std::countr_zero(changed));
    if (next & changed)
      running += items[k];
    else
      running -= items[k];
    mask = next;
    const GaussianRational d = det(running);
    if (d.is_zero()) continue;
    if ((m - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0)
      total += d;
    else
      total -= d;
  }
  return total;
}

Rational mixed_disc(const MatrixTuple& t) {
  std::vector<ComplexMatrix> items;
  items.reserve(t.n());
  for (const auto& a : t.items()) items.push_back(a.matrix());
  GaussianRational d = polarized_det(items);
  if (!d.is_real()) throw std::logic_error("mixed discriminant of Hermitian matrices has nonzero imaginary part");
  return d.re;
}

Rational mixed_disc_oracle(const MatrixTuple& t, std::size_t cap) {
  const std::size_t n = t.n();
  if (n > cap)
    throw InputError("oracle_cap", "oracle dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));

  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
    signs.push_back(permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));

  GaussianRational total;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t u = 0; u < perms.size(); ++u) {
      GaussianRational term(signs[s] * signs[u]);
      for (std::size_t k = 0; k < n && !term.is_zero(); ++k) term *= t[k](perms[s][k], perms[u][k]);
      if (!term.is_zero()) total += term;
    }
  }
  if (!total.is_real()) throw std::logic_error("oracle mixed discriminant has nonzero imaginary part");
  return total.re;
}

std::vector<HermitianMatrix> expand(std::span<const Multiplicity> prefix) {
  std::vector<HermitianMatrix> out;
  for (const auto& [m, count] : prefix) {
    if (count < 0) throw InputError("multiplicity", "negative multiplicity");
    for (int k = 0; k < count; ++k) out.push_back(m);
  }
  return out;
}

Rational mixed_disc_multi(std::span<const Multiplicity> prefix) {
  std::size_t total = 0;
  for (const auto& [m, count] : prefix) {
    if (count < 0) throw InputError("multiplicity", "negative multiplicity");
    total += static_cast<std::size_t>(count);
  }
  for (const auto& [m, count] : prefix) {
    if (m.dim() != total)
      throw InputError("multiplicity", "multiplicities sum to " + std::to_string(total) +
                                           " but a matrix has dimension " + std::to_string(m.dim()));
  }
  return mixed_disc(MatrixTuple(expand(prefix)));
}

}  // namespace mixdisc
