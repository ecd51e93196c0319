#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mixdisc/hermitian.hpp"

namespace mixdisc {

enum class PositivityKind { PD, PSDRankDeficient, NotPSD };

std::string_view to_string(PositivityKind kind);

/// Outcome of an exact PSD test. The certificate is the coefficient list
/// e_0..e_n of det(tI + A) = Σ e_k t^{n−k} (elementary symmetric functions of
/// the eigenvalues), which the caller can recompute.
struct PositivityReport {
  PositivityKind kind;
  std::size_t rank = 0;                       // meaningful when kind != NotPSD
  std::optional<std::size_t> failing_index;   // first k with e_k < 0 when NotPSD
  RationalVector coefficients;                // e_0 .. e_n

  bool psd() const { return kind != PositivityKind::NotPSD; }
  bool pd() const { return kind == PositivityKind::PD; }
};

/// Coefficients e_0..e_n of det(tI + A), Faddeev–LeVerrier recurrence.
RationalVector char_poly_elementary(const HermitianMatrix& a);

PositivityReport is_psd(const HermitianMatrix& a);

inline bool is_positive_definite(const HermitianMatrix& a) { return is_psd(a).pd(); }

/// Query for the generalized m-positivity of `alpha` with respect to
/// (ω_1 ∧ … ∧ ω_m, η) in the constant-form model.
struct ConeQuery {
  std::size_t m = 0;
  std::vector<HermitianMatrix> kaehler_factors;
  HermitianMatrix eta;
  HermitianMatrix alpha;

  /// Throws InputError unless m <= n−2, |kaehler_factors| = m, every factor
  /// is PD and all dimensions agree.
  void validate() const;
  std::size_t n() const { return alpha.dim(); }
};

/// d_k = D(ω_1, …, ω_m, η×(n−m−k), α×k) for k = 1..n−m.
struct MPositivity {
  RationalVector values;                 // values[k-1] = d_k
  std::optional<std::size_t> fails_at;   // first k with d_k <= 0

  bool positive() const { return !fails_at.has_value(); }
};

MPositivity m_positivity_check(const ConeQuery& q);

enum class ConeMembership { Interior, ClosureBoundary, Outside };

std::string_view to_string(ConeMembership m);

/// Interior iff every d_k > 0; ClosureBoundary iff every d_k >= 0 and some
/// d_k = 0; Outside otherwise. The boundary verdict reports the certificate
/// that was checked, not membership in the topological closure.
struct ConeReport {
  ConeMembership membership;
  MPositivity certificate;
};

ConeReport cone_gamma_membership(const ConeQuery& q);

}  // namespace mixdisc
