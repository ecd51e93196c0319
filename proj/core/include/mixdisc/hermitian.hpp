#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mixdisc/matrix.hpp"

namespace mixdisc {

/// n×n exact Hermitian matrix. The invariant entries(j,i) == conj(entries(i,j))
/// is checked on construction; a HermitianMatrix cannot hold anything else.
class HermitianMatrix {
 public:
  /// Throws InputError("hermitian") if `m` is not square Hermitian with n >= 1.
  explicit HermitianMatrix(ComplexMatrix m);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix diagonal(std::span<const Rational> d);
  /// Real symmetric input; throws if not symmetric.
  static HermitianMatrix from_real(const RationalMatrix& m);
  /// v vᴴ (rank <= 1, PSD).
  static HermitianMatrix outer(std::span<const GaussianRational> v);

  std::size_t dim() const { return m_.rows(); }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

  bool is_zero() const { return m_.is_zero(); }

  HermitianMatrix operator-() const;
  HermitianMatrix& operator+=(const HermitianMatrix& rhs);
  HermitianMatrix& operator-=(const HermitianMatrix& rhs);
  HermitianMatrix& operator*=(const Rational& s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(HermitianMatrix a, const Rational& s) { return a *= s; }
  friend HermitianMatrix operator*(const Rational& s, HermitianMatrix a) { return a *= s; }

  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ == b.m_; }

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// M · H · Mᴴ, which is Hermitian for any square M of matching size.
HermitianMatrix congruence(const ComplexMatrix& m, const HermitianMatrix& h);

/// The canonical real basis of n×n Hermitian matrices, n² elements:
/// E_kk for k = 0..n-1, then for each pair i < j (lexicographic) first
/// S_ij = E_ij + E_ji and then K_ij = i·(E_ij − E_ji).
class HermitianBasis {
 public:
  /// One nonzero entry of a basis element.
  struct Entry {
    std::size_t row;
    std::size_t col;
    GaussianRational value;
  };

  explicit HermitianBasis(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return n_ * n_; }

  HermitianMatrix element(std::size_t k) const;
  /// Sparse form of element k (one or two entries).
  const std::vector<Entry>& support(std::size_t k) const { return supports_[k]; }

  /// Coordinates of `a` in this basis. Throws InputError on dimension mismatch.
  RationalVector decompose(const HermitianMatrix& a) const;
  /// Inverse of decompose. Throws InputError on length mismatch.
  HermitianMatrix recompose(std::span<const Rational> coeffs) const;

 private:
  std::size_t n_;
  std::vector<std::vector<Entry>> supports_;
};

inline RationalVector decompose_in_basis(const HermitianMatrix& a, const HermitianBasis& basis) {
  return basis.decompose(a);
}

}  // namespace mixdisc
