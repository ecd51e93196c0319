#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixdisc/hodge.hpp"
#include "mixdisc/mixed_disc.hpp"

namespace mixdisc {

// Decision procedures for the Alexandrov / Khovanskii–Teissier inequality
//   D(Ω,A,B)² ≥ D(Ω,A,A)·D(Ω,B,B)
// and its equality case. In the flat-torus reading, "nef" is a constant PSD
// form, "Kähler" a constant PD form, and integration over X is D itself.

/// Which hypothesis set the caller claims for an equality query.
///   B1: Ω items and A PSD, D(Ω,B,B) >= 0.
///   B2: Ω items and A PSD, D(Ω,A,A) > 0.
///   Unchecked: no claim; used to probe outside the hypotheses.
enum class Mode { B1, B2, Unchecked };

std::string_view to_string(Mode m);
/// "b1" | "b2" | "unchecked" (case-insensitive). Throws InputError.
Mode parse_mode(std::string_view text);

struct EqualityQuery {
  OmegaTuple omega;
  HermitianMatrix a;
  HermitianMatrix b;
  Mode mode = Mode::Unchecked;
};

/// Exact status of every ingredient of (B1) and (B2).
struct HypothesisFlags {
  bool omega_psd = false;
  bool a_psd = false;
  Rational aa;  // D(Ω,A,A)
  Rational bb;  // D(Ω,B,B)

  bool b1_holds() const { return omega_psd && a_psd && bb.sign() >= 0; }
  bool b2_holds() const { return omega_psd && a_psd && aa.sign() > 0; }
  bool holds(Mode m) const;
  /// One human-readable line per failed ingredient, e.g. "B1 fails: D(Omega,b,b) = -2 < 0".
  std::vector<std::string> failures() const;
};

HypothesisFlags check_hypotheses(const OmegaTuple& omega, const HermitianMatrix& a, const HermitianMatrix& b);

enum class VerdictTag {
  StrictInequality,
  EqualityProportional,
  EqualityNonProportionalOutsideHypotheses,
  HypothesisViolated,
  TheoremViolation,
};

std::string_view to_string(VerdictTag t);

/// Nonzero (s0, t0) with s0·F_A + t0·F_B = 0, normalized to coprime integers
/// with the first nonzero component positive.
struct ProportionalityWitness {
  Rational s0;
  Rational t0;
};

/// Returns a witness when the two functionals are linearly dependent.
std::optional<ProportionalityWitness> proportionality_witness(const FunctionalVec& fa, const FunctionalVec& fb);

struct Verdict {
  VerdictTag tag;
  Rational lhs;  // D(Ω,A,B)²
  Rational rhs;  // D(Ω,A,A)·D(Ω,B,B)
  HypothesisFlags flags;
  std::optional<ProportionalityWitness> witness;
  /// F_A and F_B, carried for EqualityNonProportional* and TheoremViolation.
  std::optional<FunctionalVec> fa;
  std::optional<FunctionalVec> fb;
  std::string detail;

  Rational gap() const { return lhs - rhs; }
};

struct AlexandrovResult {
  Rational lhs;
  Rational rhs;
  bool holds;
};

/// Throws PreconditionError when an Ω item or `a` is not PSD.
AlexandrovResult alexandrov_verify(const OmegaTuple& omega, const HermitianMatrix& a, const HermitianMatrix& b);

/// Equality-case classifier. In mode B1/B2 a failed hypothesis yields
/// HypothesisViolated. TheoremViolation is emitted only when a hypothesis set
/// verifiably holds (the claimed one in B1/B2, either one in Unchecked) and
/// equality comes with non-proportional functionals, or when the inequality
/// itself fails under PSD Ω and A.
Verdict classify_equality(const EqualityQuery& q);

struct KtReport {
  Verdict verdict;
  /// α and β proportional as matrices.
  bool matrices_proportional = false;
  /// (Ω, I) satisfies the Hodge index theorem.
  bool prefix_hodge_index = false;
};

/// Khovanskii–Teissier check on the flat torus. Prefix matrices and α must be
/// PSD (PreconditionError otherwise). When (Ω, I) satisfies the Hodge index
/// theorem, equality must force α ∝ β; a failure there is a TheoremViolation.
KtReport kt_torus_verify(std::span<const Multiplicity> prefix, const HermitianMatrix& alpha,
                         const HermitianMatrix& beta);

struct SequenceReport {
  RationalVector s;                            // s_k = D(α×k, β×(n−k)), k = 0..n
  std::vector<std::size_t> equality_positions; // k in 1..n−1 with s_k² = s_{k−1}s_{k+1}
  bool log_concave = true;
  /// D(α×k, β×(n−1−k), ·) ≠ 0 for every k = 0..n−1.
  bool nondegenerate = false;
  /// Set when the full equality chain and nondegeneracy hold.
  std::optional<bool> end_functionals_proportional;
  bool violation = false;
};

/// Throws PreconditionError when α or β is not PSD, InputError on n < 2.
SequenceReport sk_chain(const HermitianMatrix& alpha, const HermitianMatrix& beta);

struct Counterexample {
  EqualityQuery query;
  Verdict verdict;
};

/// Ω = I×(n−2), a rank-1 PSD `a` (default E_11) and a nonzero Hermitian b with
/// D(Ω,a,b) = 0 and D(Ω,I,b) = 0. `combination`, when given, selects b as
/// that combination of the exact kernel basis (it must not be zero);
/// otherwise the first kernel basis vector is taken. A user-supplied `a` must
/// be PSD of rank 1 (PreconditionError otherwise).
Counterexample counterexample_generate(std::size_t n, const std::optional<HermitianMatrix>& a = std::nullopt,
                                       const std::optional<RationalVector>& combination = std::nullopt);

/// True when b = λ·a for some rational λ (including b = 0), or a = 0.
bool matrices_proportional(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace mixdisc
