#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mixdisc/hermitian.hpp"
#include "mixdisc/mixed_disc.hpp"

namespace mixdisc {

// Linear Hodge-index machinery on n×n Hermitian matrices. A Hermitian matrix
// stands for a constant real (1,1)-form on Cⁿ, and every wedge-and-integrate
// pairing is the mixed discriminant D. Vectors are coordinates in the
// canonical HermitianBasis (length n²).

/// The n−2 leading factors Ω = (A_1, …, A_{n−2}); empty when n = 2.
class OmegaTuple {
 public:
  /// Throws InputError("omega_shape") unless n >= 2, |items| = n−2 and every item has dimension n.
  OmegaTuple(std::size_t n, std::vector<HermitianMatrix> items);

  /// Ω = (m × (n−2)).
  static OmegaTuple repeated(const HermitianMatrix& m);

  std::size_t n() const { return n_; }
  const std::vector<HermitianMatrix>& items() const { return items_; }

  /// (items..., x, y) as a MatrixTuple.
  MatrixTuple with(const HermitianMatrix& x, const HermitianMatrix& y) const;

 private:
  std::size_t n_;
  std::vector<HermitianMatrix> items_;
};

/// D(Ω, x, y).
Rational pairing(const OmegaTuple& omega, const HermitianMatrix& x, const HermitianMatrix& y);

/// Gram matrix of Q(β, γ) = D(Ω, β, γ) in the canonical basis.
struct GramMatrix {
  std::size_t n = 0;
  RationalMatrix entries;  // n²×n², symmetric

  /// vᵀ G w.
  Rational form(std::span<const Rational> v, std::span<const Rational> w) const;
};

GramMatrix gram(const OmegaTuple& omega);

/// The linear functional B ↦ D(Ω, x, B), as coefficients on the canonical basis.
struct FunctionalVec {
  std::size_t n = 0;
  RationalVector coeffs;

  Rational operator()(const HermitianMatrix& b) const;
  bool is_zero() const { return is_zero_vector(coeffs); }
};

FunctionalVec functional(const OmegaTuple& prefix, const HermitianMatrix& x);
/// Same, reusing an already assembled Gram matrix of `prefix`.
FunctionalVec functional(const GramMatrix& g, const HermitianMatrix& x);

/// Kernel of a functional: {γ : D(Ω, η, γ) = 0}.
struct PrimitiveSubspace {
  std::size_t n = 0;
  std::vector<RationalVector> basis_vectors;

  std::size_t dim() const { return basis_vectors.size(); }
  /// n²×d matrix whose columns are the basis vectors.
  RationalMatrix matrix() const { return from_columns(basis_vectors, n * n); }
};

PrimitiveSubspace primitive_space(const FunctionalVec& f);
PrimitiveSubspace primitive_space(const OmegaTuple& omega, const HermitianMatrix& eta);

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t total() const { return positive + zero + negative; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric rational matrix.
Signature signature(const RationalMatrix& symmetric);

/// Bᵀ G B for the basis matrix B of `sub`.
RationalMatrix restrict_to(const GramMatrix& g, const PrimitiveSubspace& sub);

Signature signature_on(const GramMatrix& g, const PrimitiveSubspace& sub);

enum class HodgeVerdict { SatisfiesHIT, SemiNegativeWithKernel, Indefinite };

std::string_view to_string(HodgeVerdict v);

struct HodgeIndexReport {
  HodgeVerdict verdict;
  Signature restricted;
  /// Null directions of Q on the primitive space (SemiNegativeWithKernel).
  std::vector<RationalVector> kernel;
  /// Primitive v with Q(v, v) > 0 (Indefinite).
  std::optional<RationalVector> witness;
};

/// Decides whether Q is negative definite on the primitive space of (Ω, η).
/// A zero functional is not refused: the primitive space is then the whole space.
HodgeIndexReport hodge_index_check(const OmegaTuple& omega, const HermitianMatrix& eta);

struct LefschetzSplit {
  Rational c;
  HermitianMatrix gamma;
};

/// β = c·η + γ with γ primitive and c = D(Ω,η,β)/D(Ω,η,η).
/// Throws PreconditionError("nondegenerate_eta") when D(Ω,η,η) = 0.
LefschetzSplit lefschetz(const OmegaTuple& omega, const HermitianMatrix& eta, const HermitianMatrix& beta);

struct ZeroVectorCheck {
  /// True when D(Ω, γ, ·) is identically zero, which the lemma asserts.
  bool functional_vanishes;
  FunctionalVec functional;
};

/// For Ω and η PSD with D(Ω,η,η) ≠ 0 and a primitive γ with Q(γ,γ) = 0,
/// reports whether D(Ω, γ, ·) vanishes. Throws PreconditionError naming the
/// failed condition when any hypothesis does not hold.
ZeroVectorCheck zero_vector_check(const OmegaTuple& omega, const HermitianMatrix& eta, const HermitianMatrix& gamma);

/// Whether A ↦ D(Ω, A, ·) is injective, i.e. the Gram matrix is nonsingular.
bool functional_map_injective(const GramMatrix& g);

}  // namespace mixdisc
