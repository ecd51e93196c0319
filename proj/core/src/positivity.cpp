#include "mixdisc/positivity.hpp"

#include <stdexcept>
#include <string>

#include "mixdisc/mixed_disc.hpp"

namespace mixdisc {

std::string_view to_string(PositivityKind kind) {
  switch (kind) {
    case PositivityKind::PD: return "PD";
    case PositivityKind::PSDRankDeficient: return "PSD_rank_deficient";
    case PositivityKind::NotPSD: return "NotPSD";
  }
  return "?";
}

std::string_view to_string(ConeMembership m) {
  switch (m) {
    case ConeMembership::Interior: return "Interior";
    case ConeMembership::ClosureBoundary: return "Closure_boundary";
    case ConeMembership::Outside: return "Outside";
  }
  return "?";
}

RationalVector char_poly_elementary(const HermitianMatrix& a) {
  // det(λI − A) = Σ c_k λ^{n−k}, c_0 = 1:
  //   M_k = A·M_{k−1} + c_{k−1}·I,  c_k = −tr(A·M_k)/k,  M_0 = 0.
  // det(tI + A) has e_k = (−1)^k c_k.
  const std::size_t n = a.dim();
  const ComplexMatrix& am = a.matrix();
  ComplexMatrix mk(n, n);
  GaussianRational c_prev(1);
  RationalVector e{Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    mk = am * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c_prev;
    const ComplexMatrix amk = am * mk;
    GaussianRational trace;
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    GaussianRational ck = -trace / GaussianRational(static_cast<long>(k));
    if (!ck.is_real()) throw std::logic_error("characteristic polynomial of a Hermitian matrix is not real");
    e.push_back(k % 2 == 0 ? ck.re : -ck.re);
    c_prev = std::move(ck);
  }
  return e;
}

PositivityReport is_psd(const HermitianMatrix& a) {
  PositivityReport report{PositivityKind::PD, 0, std::nullopt, char_poly_elementary(a)};
  const auto& e = report.coefficients;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].sign() < 0) {
      report.kind = PositivityKind::NotPSD;
      report.failing_index = k;
      return report;
    }
    if (e[k].sign() > 0) report.rank = k;
  }
  report.kind = report.rank == a.dim() ? PositivityKind::PD : PositivityKind::PSDRankDeficient;
  return report;
}

void ConeQuery::validate() const {
  const std::size_t dim = alpha.dim();
  if (dim < 2 || m > dim - 2)
    throw InputError("cone_query", "m = " + std::to_string(m) + " must satisfy m <= n - 2 for n = " + std::to_string(dim));
  if (kaehler_factors.size() != m)
    throw InputError("cone_query", "expected " + std::to_string(m) + " Kaehler factors, got " +
                                       std::to_string(kaehler_factors.size()));
  if (eta.dim() != dim) throw InputError("dimension", "eta dimension does not match alpha");
  for (const auto& w : kaehler_factors) {
    if (w.dim() != dim) throw InputError("dimension", "Kaehler factor dimension does not match alpha");
    if (!is_positive_definite(w)) throw InputError("kaehler_factor_pd", "Kaehler factor is not positive definite");
  }
}

MPositivity m_positivity_check(const ConeQuery& q) {
  q.validate();
  const std::size_t n = q.n();
  MPositivity out;
  for (std::size_t k = 1; k <= n - q.m; ++k) {
    std::vector<HermitianMatrix> items = q.kaehler_factors;
    for (std::size_t j = 0; j < n - q.m - k; ++j) items.push_back(q.eta);
    for (std::size_t j = 0; j < k; ++j) items.push_back(q.alpha);
    Rational d = mixed_disc(MatrixTuple(std::move(items)));
    if (d.sign() <= 0 && !out.fails_at) out.fails_at = k;
    out.values.push_back(std::move(d));
  }
  return out;
}

ConeReport cone_gamma_membership(const ConeQuery& q) {
  ConeReport report{ConeMembership::Interior, m_positivity_check(q)};
  if (report.certificate.positive()) return report;
  bool any_negative = false;
  for (const auto& d : report.certificate.values) any_negative = any_negative || d.sign() < 0;
  report.membership = any_negative ? ConeMembership::Outside : ConeMembership::ClosureBoundary;
  return report;
}

}  // namespace mixdisc
