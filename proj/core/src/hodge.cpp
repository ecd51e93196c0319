#include "mixdisc/hodge.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "mixdisc/linalg.hpp"
#include "mixdisc/positivity.hpp"

namespace mixdisc {

namespace {

// Sign of the permutation (rest..., a, c) of {0..n-1}, where rest lists the
// remaining indices in increasing order.
int tail_sign(std::size_t n, std::size_t a, std::size_t c) {
  std::vector<std::size_t> seq;
  seq.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    if (k != a && k != c) seq.push_back(k);
  seq.push_back(a);
  seq.push_back(c);
  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// D(Ω, E_ab, E_cd) for elementary matrices. Fixing the last two slots of the
// double-permutation sum to (a,b) and (c,d) leaves the polarized determinant
// of the Ω items restricted to rows {a,c}ᶜ and columns {b,d}ᶜ, up to the
// signs of moving (a,c) and (b,d) to the end.
class ElementaryPairing {
 public:
  explicit ElementaryPairing(const OmegaTuple& omega) : omega_(omega), n_(omega.n()) {}

  GaussianRational operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    if (a == c || b == d) return GaussianRational();
    const std::uint32_t rows = (1u << a) | (1u << c);
    const std::uint32_t cols = (1u << b) | (1u << d);
    auto [it, inserted] = cache_.try_emplace({rows, cols});
    if (inserted) it->second = minor_disc(rows, cols);
    if (it->second.is_zero()) return it->second;
    const int s = tail_sign(n_, a, c) * tail_sign(n_, b, d);
    return s > 0 ? it->second : -it->second;
  }

 private:
  GaussianRational minor_disc(std::uint32_t rows, std::uint32_t cols) const {
    std::vector<std::size_t> r, c;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!(rows >> k & 1u)) r.push_back(k);
      if (!(cols >> k & 1u)) c.push_back(k);
    }
    std::vector<ComplexMatrix> minors;
    minors.reserve(omega_.items().size());
    for (const auto& a : omega_.items()) {
      ComplexMatrix m(r.size(), c.size());
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = a(r[i], c[j]);
      minors.push_back(std::move(m));
    }
    return polarized_det(minors);
  }

  const OmegaTuple& omega_;
  std::size_t n_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, GaussianRational> cache_;
};

}  // namespace

OmegaTuple::OmegaTuple(std::size_t n, std::vector<HermitianMatrix> items) : n_(n), items_(std::move(items)) {
  if (n < 2) throw InputError("omega_shape", "Omega tuple needs n >= 2");
  if (n > 31) throw InputError("omega_shape", "dimension too large");
  if (items_.size() != n - 2)
    throw InputError("omega_shape", "Omega tuple for n = " + std::to_string(n) + " needs " + std::to_string(n - 2) +
                                        " matrices, got " + std::to_string(items_.size()));
  for (const auto& a : items_)
    if (a.dim() != n) throw InputError("omega_shape", "Omega item has dimension " + std::to_string(a.dim()));
}

OmegaTuple OmegaTuple::repeated(const HermitianMatrix& m) {
  return OmegaTuple(m.dim(), std::vector<HermitianMatrix>(m.dim() >= 2 ? m.dim() - 2 : 0, m));
}

MatrixTuple OmegaTuple::with(const HermitianMatrix& x, const HermitianMatrix& y) const {
  if (x.dim() != n_ || y.dim() != n_) throw InputError("dimension", "matrix dimension does not match Omega tuple");
  std::vector<HermitianMatrix> items = items_;
  items.push_back(x);
  items.push_back(y);
  return MatrixTuple(std::move(items));
}

Rational pairing(const OmegaTuple& omega, const HermitianMatrix& x, const HermitianMatrix& y) {
  return mixed_disc(omega.with(x, y));
}

Rational GramMatrix::form(std::span<const Rational> v, std::span<const Rational> w) const {
  return dot(v, mat_vec(entries, w));
}

GramMatrix gram(const OmegaTuple& omega) {
  const std::size_t n = omega.n();
  const HermitianBasis basis(n);
  const std::size_t dim = basis.size();
  ElementaryPairing pair(omega);

  GramMatrix g{n, RationalMatrix(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t l = k; l < dim; ++l) {
      GaussianRational v;
      for (const auto& e : basis.support(k))
        for (const auto& f : basis.support(l)) {
          GaussianRational p = pair(e.row, e.col, f.row, f.col);
          if (!p.is_zero()) v += e.value * f.value * p;
        }
      if (!v.is_real()) throw std::logic_error("Gram entry has nonzero imaginary part");
      g.entries(k, l) = v.re;
      g.entries(l, k) = v.re;
    }
  }
  return g;
}

Rational FunctionalVec::operator()(const HermitianMatrix& b) const {
  if (b.dim() != n) throw InputError("dimension", "functional evaluated on a matrix of the wrong dimension");
  return dot(coeffs, HermitianBasis(n).decompose(b));
}

FunctionalVec functional(const GramMatrix& g, const HermitianMatrix& x) {
  if (x.dim() != g.n) throw InputError("dimension", "functional: matrix dimension does not match prefix");
  return {g.n, mat_vec(g.entries, HermitianBasis(g.n).decompose(x))};
}

FunctionalVec functional(const OmegaTuple& prefix, const HermitianMatrix& x) {
  if (x.dim() != prefix.n()) throw InputError("dimension", "functional: matrix dimension does not match prefix");
  return functional(gram(prefix), x);
}

PrimitiveSubspace primitive_space(const FunctionalVec& f) {
  const RationalMatrix row(1, f.coeffs.size(), f.coeffs);
  return {f.n, kernel(row)};
}

PrimitiveSubspace primitive_space(const OmegaTuple& omega, const HermitianMatrix& eta) {
  return primitive_space(functional(omega, eta));
}

Signature signature(const RationalMatrix& symmetric) {
  Signature s;
  for (const auto& d : congruence_diagonalize(symmetric).diagonal) {
    if (d.sign() > 0)
      ++s.positive;
    else if (d.sign() < 0)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

RationalMatrix restrict_to(const GramMatrix& g, const PrimitiveSubspace& sub) {
  if (sub.n != g.n) throw InputError("dimension", "subspace dimension does not match Gram matrix");
  const RationalMatrix b = sub.matrix();
  return b.transpose() * g.entries * b;
}

Signature signature_on(const GramMatrix& g, const PrimitiveSubspace& sub) {
  return signature(restrict_to(g, sub));
}

std::string_view to_string(HodgeVerdict v) {
  switch (v) {
    case HodgeVerdict::SatisfiesHIT: return "SatisfiesHIT";
    case HodgeVerdict::SemiNegativeWithKernel: return "SemiNegativeWithKernel";
    case HodgeVerdict::Indefinite: return "Indefinite";
  }
  return "?";
}

HodgeIndexReport hodge_index_check(const OmegaTuple& omega, const HermitianMatrix& eta) {
  const GramMatrix g = gram(omega);
  const PrimitiveSubspace sub = primitive_space(functional(g, eta));
  const RationalMatrix b = sub.matrix();
  const Congruence cg = congruence_diagonalize(b.transpose() * g.entries * b);

  HodgeIndexReport report{HodgeVerdict::SatisfiesHIT, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < cg.diagonal.size(); ++i) {
    const int s = cg.diagonal[i].sign();
    if (s < 0) {
      ++report.restricted.negative;
      continue;
    }
    RationalVector v = mat_vec(b, cg.transform.column(i));
    if (s > 0) {
      ++report.restricted.positive;
      if (!report.witness) report.witness = std::move(v);
    } else {
      ++report.restricted.zero;
      report.kernel.push_back(std::move(v));
    }
  }
  if (report.restricted.positive > 0) {
    report.verdict = HodgeVerdict::Indefinite;
    report.kernel.clear();
  } else if (report.restricted.zero > 0) {
    report.verdict = HodgeVerdict::SemiNegativeWithKernel;
  }
  return report;
}

LefschetzSplit lefschetz(const OmegaTuple& omega, const HermitianMatrix& eta, const HermitianMatrix& beta) {
  const Rational eta_eta = pairing(omega, eta, eta);
  if (eta_eta.is_zero())
    throw PreconditionError("nondegenerate_eta", "Lefschetz decomposition needs D(Omega, eta, eta) != 0");
  Rational c = pairing(omega, eta, beta) / eta_eta;
  HermitianMatrix gamma = beta - c * eta;
  return {std::move(c), std::move(gamma)};
}

ZeroVectorCheck zero_vector_check(const OmegaTuple& omega, const HermitianMatrix& eta, const HermitianMatrix& gamma) {
  for (const auto& a : omega.items())
    if (!is_psd(a).psd()) throw PreconditionError("omega_psd", "Omega item is not semi-positive definite");
  if (!is_psd(eta).psd()) throw PreconditionError("eta_psd", "eta is not semi-positive definite");
  if (pairing(omega, eta, eta).is_zero())
    throw PreconditionError("nondegenerate_eta", "zero-vector check needs D(Omega, eta, eta) != 0");
  const GramMatrix g = gram(omega);
  const RationalVector coords = HermitianBasis(omega.n()).decompose(gamma);
  if (!functional(g, eta)(gamma).is_zero())
    throw PreconditionError("gamma_primitive", "gamma is not primitive: D(Omega, eta, gamma) != 0");
  if (!g.form(coords, coords).is_zero())
    throw PreconditionError("gamma_null", "gamma is not a null vector: D(Omega, gamma, gamma) != 0");
  FunctionalVec f{g.n, mat_vec(g.entries, coords)};
  const bool vanishes = f.is_zero();
  return {vanishes, std::move(f)};
}

bool functional_map_injective(const GramMatrix& g) { return rank(g.entries) == g.entries.rows(); }

}  // namespace mixdisc
