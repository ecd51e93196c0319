#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mixdisc/hermitian.hpp"

namespace mixdisc {

/// Exactly n Hermitian matrices of dimension n: the arguments of D(A_1, ..., A_n).
class MatrixTuple {
 public:
  /// Throws InputError("tuple_shape") unless |items| = n >= 1 and every item has dimension n.
  explicit MatrixTuple(std::vector<HermitianMatrix> items);

  std::size_t n() const { return items_.size(); }
  const std::vector<HermitianMatrix>& items() const { return items_; }
  const HermitianMatrix& operator[](std::size_t k) const { return items_[k]; }

 private:
  std::vector<HermitianMatrix> items_;
};

/// A matrix together with how many times it fills a slot of D.
using Multiplicity = std::pair<HermitianMatrix, int>;

/// Mixed discriminant D(A_1, ..., A_n), normalized as the full polarization of
/// det with no 1/n! factor: D(A, ..., A) = n!·det(A) and D(I, ..., I) = n!.
///
/// Computed by inclusion–exclusion over the 2ⁿ subset sums:
///   D = Σ_{S ⊆ {1..n}} (−1)^{n−|S|} det(Σ_{i∈S} A_i).
Rational mixed_disc(const MatrixTuple& t);

/// Independent double-permutation formula
///   Σ_{σ,τ ∈ S_n} sgn σ · sgn τ · Π_k (A_k)_{σ(k) τ(k)}.
/// Cost is (n!)², so n is capped; throws InputError("oracle_cap") above `cap`.
Rational mixed_disc_oracle(const MatrixTuple& t, std::size_t cap = 5);

/// D on the tuple obtained by repeating each matrix by its multiplicity.
/// Throws InputError("multiplicity") unless multiplicities are >= 0 and sum to n.
Rational mixed_disc_multi(std::span<const Multiplicity> prefix);

/// Polarization for arbitrary (not necessarily Hermitian) m×m matrices,
/// m = |items|. Returns 1 for the empty tuple.
GaussianRational polarized_det(std::span<const ComplexMatrix> items);

/// Expands a multiplicity list into a flat list of matrices.
std::vector<HermitianMatrix> expand(std::span<const Multiplicity> prefix);

}  // namespace mixdisc
