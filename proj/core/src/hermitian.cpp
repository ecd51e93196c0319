#include "mixdisc/hermitian.hpp"

#include <string>

namespace mixdisc {

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || !m_.is_square())
    throw InputError("hermitian", "Hermitian matrix must be square with n >= 1");
  const std::size_t n = m_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (!m_(i, i).is_real())
      throw InputError("hermitian", "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") is not real");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(m_(j, i) == m_(i, j).conj()))
        throw InputError("hermitian", "entry (" + std::to_string(j) + "," + std::to_string(i) +
                                          ") is not the conjugate of entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
    }
  }
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(ComplexMatrix::identity(n));
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) { return HermitianMatrix(ComplexMatrix(n, n)); }

HermitianMatrix HermitianMatrix::diagonal(std::span<const Rational> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_real(const RationalMatrix& r) {
  ComplexMatrix m(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = r(i, j);
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::outer(std::span<const GaussianRational> v) {
  ComplexMatrix m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j].conj();
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::operator-() const {
  ComplexMatrix m = m_;
  m *= GaussianRational(-1);
  return {std::move(m), Unchecked{}};
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& rhs) {
  m_ += rhs.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& rhs) {
  m_ -= rhs.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(const Rational& s) {
  m_ *= GaussianRational(s);
  return *this;
}

HermitianMatrix congruence(const ComplexMatrix& m, const HermitianMatrix& h) {
  return HermitianMatrix(m * h.matrix() * m.adjoint());
}

HermitianBasis::HermitianBasis(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("dimension", "Hermitian basis needs n >= 1");
  supports_.reserve(n * n);
  for (std::size_t k = 0; k < n; ++k) supports_.push_back({{k, k, GaussianRational(1)}});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      supports_.push_back({{i, j, GaussianRational(1)}, {j, i, GaussianRational(1)}});
      supports_.push_back({{i, j, GaussianRational::i()}, {j, i, -GaussianRational::i()}});
    }
  }
}

HermitianMatrix HermitianBasis::element(std::size_t k) const {
  ComplexMatrix m(n_, n_);
  for (const auto& e : supports_.at(k)) m(e.row, e.col) = e.value;
  return HermitianMatrix(std::move(m));
}

RationalVector HermitianBasis::decompose(const HermitianMatrix& a) const {
  if (a.dim() != n_) throw InputError("dimension", "decompose: matrix dimension does not match basis");
  RationalVector coeffs;
  coeffs.reserve(size());
  for (std::size_t k = 0; k < n_; ++k) coeffs.push_back(a(k, k).re);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      coeffs.push_back(a(i, j).re);
      coeffs.push_back(a(i, j).im);
    }
  }
  return coeffs;
}

HermitianMatrix HermitianBasis::recompose(std::span<const Rational> coeffs) const {
  if (coeffs.size() != size()) throw InputError("vector_length", "recompose: coefficient vector has wrong length");
  ComplexMatrix m(n_, n_);
  for (std::size_t k = 0; k < size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    for (const auto& e : supports_[k]) m(e.row, e.col) += e.value * GaussianRational(coeffs[k]);
  }
  return HermitianMatrix(std::move(m));
}

}  // namespace mixdisc
