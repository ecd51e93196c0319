#include "mixdisc/teissier.hpp"

#include <algorithm>
#include <cctype>

#include "mixdisc/linalg.hpp"
#include "mixdisc/positivity.hpp"

namespace mixdisc {

namespace {

bool all_psd(const std::vector<HermitianMatrix>& items) {
  return std::all_of(items.begin(), items.end(), [](const HermitianMatrix& m) { return is_psd(m).psd(); });
}

// Scales (s, t) to coprime integers with the first nonzero entry positive.
ProportionalityWitness normalize(Rational s, Rational t) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), s.denominator().get_mpz_t(), t.denominator().get_mpz_t());
  s *= Rational(l, 1);
  t *= Rational(l, 1);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.numerator().get_mpz_t(), t.numerator().get_mpz_t());
  if (g != 0) {
    s /= Rational(g, 1);
    t /= Rational(g, 1);
  }
  if (s.sign() < 0 || (s.is_zero() && t.sign() < 0)) {
    s = -s;
    t = -t;
  }
  return {std::move(s), std::move(t)};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::B1: return "b1";
    case Mode::B2: return "b2";
    case Mode::Unchecked: return "unchecked";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "b1") return Mode::B1;
  if (lower == "b2") return Mode::B2;
  if (lower == "unchecked") return Mode::Unchecked;
  throw InputError("mode", "unknown mode '" + std::string(text) + "' (expected b1, b2 or unchecked)");
}

std::string_view to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::StrictInequality: return "StrictInequality";
    case VerdictTag::EqualityProportional: return "EqualityProportional";
    case VerdictTag::EqualityNonProportionalOutsideHypotheses: return "EqualityNonProportionalOutsideHypotheses";
    case VerdictTag::HypothesisViolated: return "HypothesisViolated";
    case VerdictTag::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

bool HypothesisFlags::holds(Mode m) const {
  switch (m) {
    case Mode::B1: return b1_holds();
    case Mode::B2: return b2_holds();
    case Mode::Unchecked: return true;
  }
  return false;
}

std::vector<std::string> HypothesisFlags::failures() const {
  std::vector<std::string> out;
  if (!omega_psd) out.emplace_back("B1, B2 fail: an Omega item is not semi-positive definite");
  if (!a_psd) out.emplace_back("B1, B2 fail: a is not semi-positive definite");
  if (bb.sign() < 0) out.push_back("B1 fails: D(Omega,b,b) = " + bb.str() + " < 0");
  if (aa.sign() <= 0) out.push_back("B2 fails: D(Omega,a,a) = " + aa.str() + (aa.is_zero() ? "" : " < 0"));
  return out;
}

HypothesisFlags check_hypotheses(const OmegaTuple& omega, const HermitianMatrix& a, const HermitianMatrix& b) {
  HypothesisFlags f;
  f.omega_psd = all_psd(omega.items());
  f.a_psd = is_psd(a).psd();
  f.aa = pairing(omega, a, a);
  f.bb = pairing(omega, b, b);
  return f;
}

std::optional<ProportionalityWitness> proportionality_witness(const FunctionalVec& fa, const FunctionalVec& fb) {
  if (fa.coeffs.size() != fb.coeffs.size()) throw InputError("dimension", "functionals of different dimension");
  RationalMatrix stacked(2, fa.coeffs.size());
  for (std::size_t k = 0; k < fa.coeffs.size(); ++k) {
    stacked(0, k) = fa.coeffs[k];
    stacked(1, k) = fb.coeffs[k];
  }
  if (rank(stacked) == 2) return std::nullopt;
  if (fa.is_zero()) return ProportionalityWitness{1, 0};
  // rank 1 with F_A ≠ 0: F_B = r·F_A, so r·F_A − F_B = 0.
  std::size_t pivot = 0;
  while (fa.coeffs[pivot].is_zero()) ++pivot;
  const Rational r = fb.coeffs[pivot] / fa.coeffs[pivot];
  return normalize(r, Rational(-1));
}

AlexandrovResult alexandrov_verify(const OmegaTuple& omega, const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != omega.n() || b.dim() != omega.n())
    throw InputError("dimension", "matrix dimension does not match Omega tuple");
  if (!all_psd(omega.items()))
    throw PreconditionError("omega_psd", "Alexandrov inequality needs every Omega item semi-positive definite");
  if (!is_psd(a).psd()) throw PreconditionError("a_psd", "Alexandrov inequality needs a semi-positive definite");
  const Rational ab = pairing(omega, a, b);
  AlexandrovResult r{ab * ab, pairing(omega, a, a) * pairing(omega, b, b), false};
  r.holds = r.lhs >= r.rhs;
  return r;
}

Verdict classify_equality(const EqualityQuery& q) {
  if (q.a.dim() != q.omega.n() || q.b.dim() != q.omega.n())
    throw InputError("dimension", "matrix dimension does not match Omega tuple");

  Verdict v{VerdictTag::StrictInequality, {}, {}, check_hypotheses(q.omega, q.a, q.b), {}, {}, {}, {}};
  const Rational ab = pairing(q.omega, q.a, q.b);
  v.lhs = ab * ab;
  v.rhs = v.flags.aa * v.flags.bb;

  if (q.mode != Mode::Unchecked && !v.flags.holds(q.mode)) {
    v.tag = VerdictTag::HypothesisViolated;
    v.detail = join(v.flags.failures());
    return v;
  }
  if (v.flags.omega_psd && v.flags.a_psd && v.lhs < v.rhs) {
    v.tag = VerdictTag::TheoremViolation;
    v.detail = "Alexandrov inequality fails with PSD Omega and a";
    return v;
  }
  if (v.lhs != v.rhs) return v;

  const GramMatrix g = gram(q.omega);
  FunctionalVec fa = functional(g, q.a);
  FunctionalVec fb = functional(g, q.b);
  v.witness = proportionality_witness(fa, fb);
  if (v.witness) {
    v.tag = VerdictTag::EqualityProportional;
    return v;
  }
  v.fa = std::move(fa);
  v.fb = std::move(fb);
  const bool backed = q.mode == Mode::Unchecked ? (v.flags.b1_holds() || v.flags.b2_holds()) : true;
  if (backed) {
    v.tag = VerdictTag::TheoremViolation;
    v.detail = "equality with non-proportional functionals while a hypothesis set holds";
  } else {
    v.tag = VerdictTag::EqualityNonProportionalOutsideHypotheses;
    v.detail = join(v.flags.failures());
  }
  return v;
}

bool matrices_proportional(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw InputError("dimension", "matrices of different dimension");
  const HermitianBasis basis(a.dim());
  const RationalVector va = basis.decompose(a);
  const RationalVector vb = basis.decompose(b);
  RationalMatrix stacked(2, va.size());
  for (std::size_t k = 0; k < va.size(); ++k) {
    stacked(0, k) = va[k];
    stacked(1, k) = vb[k];
  }
  return rank(stacked) <= 1;
}

KtReport kt_torus_verify(std::span<const Multiplicity> prefix, const HermitianMatrix& alpha,
                         const HermitianMatrix& beta) {
  const std::size_t n = alpha.dim();
  if (beta.dim() != n) throw InputError("dimension", "alpha and beta differ in dimension");
  OmegaTuple omega(n, expand(prefix));
  if (!all_psd(omega.items()))
    throw PreconditionError("prefix_psd", "every prefix matrix must be semi-positive definite (nef)");
  if (!is_psd(alpha).psd()) throw PreconditionError("alpha_psd", "alpha must be semi-positive definite (nef)");

  KtReport report{classify_equality({omega, alpha, beta, Mode::Unchecked}), matrices_proportional(alpha, beta),
                  hodge_index_check(omega, HermitianMatrix::identity(n)).verdict == HodgeVerdict::SatisfiesHIT};
  Verdict& v = report.verdict;
  const bool backed = v.flags.b1_holds() || v.flags.b2_holds();
  if (v.tag == VerdictTag::EqualityProportional && backed && report.prefix_hodge_index &&
      !report.matrices_proportional) {
    v.tag = VerdictTag::TheoremViolation;
    v.detail = "prefix satisfies the Hodge index theorem but equality holds for non-proportional alpha, beta";
  }
  return report;
}

SequenceReport sk_chain(const HermitianMatrix& alpha, const HermitianMatrix& beta) {
  const std::size_t n = alpha.dim();
  if (n < 2) throw InputError("dimension", "s_k chain needs n >= 2");
  if (beta.dim() != n) throw InputError("dimension", "alpha and beta differ in dimension");
  if (!is_psd(alpha).psd()) throw PreconditionError("alpha_psd", "alpha must be semi-positive definite (nef)");
  if (!is_psd(beta).psd()) throw PreconditionError("beta_psd", "beta must be semi-positive definite (nef)");

  SequenceReport r;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::vector<Multiplicity> prefix{{alpha, static_cast<int>(k)}, {beta, static_cast<int>(n - k)}};
    r.s.push_back(mixed_disc_multi(prefix));
  }
  for (std::size_t k = 1; k < n; ++k) {
    const Rational sq = r.s[k] * r.s[k];
    const Rational prod = r.s[k - 1] * r.s[k + 1];
    if (sq == prod) r.equality_positions.push_back(k);
    if (sq < prod) r.log_concave = false;
  }

  // F_k = D(α×k, β×(n−1−k), ·), k = 0..n−1.
  std::vector<FunctionalVec> fk;
  for (std::size_t k = 0; k < n; ++k) {
    const bool use_alpha = k >= 1;
    const std::vector<Multiplicity> prefix{{alpha, static_cast<int>(use_alpha ? k - 1 : 0)},
                                           {beta, static_cast<int>(use_alpha ? n - 1 - k : n - 2)}};
    fk.push_back(functional(OmegaTuple(n, expand(prefix)), use_alpha ? alpha : beta));
  }
  r.nondegenerate = std::none_of(fk.begin(), fk.end(), [](const FunctionalVec& f) { return f.is_zero(); });

  if (r.nondegenerate && r.equality_positions.size() == n - 1)
    r.end_functionals_proportional = proportionality_witness(fk.back(), fk.front()).has_value();
  r.violation = !r.log_concave || (r.end_functionals_proportional && !*r.end_functionals_proportional);
  return r;
}

Counterexample counterexample_generate(std::size_t n, const std::optional<HermitianMatrix>& a_in,
                                       const std::optional<RationalVector>& combination) {
  if (n < 2) throw InputError("dimension", "counterexample needs n >= 2");
  const HermitianMatrix id = HermitianMatrix::identity(n);
  OmegaTuple omega(n, std::vector<HermitianMatrix>(n - 2, id));

  HermitianMatrix a = [&] {
    if (a_in) return *a_in;
    RationalVector d(n);
    d[0] = 1;
    return HermitianMatrix::diagonal(d);
  }();
  if (a.dim() != n) throw InputError("dimension", "a has the wrong dimension");
  const PositivityReport pa = is_psd(a);
  if (!pa.psd() || pa.rank != 1) throw PreconditionError("a_rank_one", "counterexample needs a rank-1 PSD a");

  const GramMatrix g = gram(omega);
  const FunctionalVec fa = functional(g, a);
  const FunctionalVec fi = functional(g, id);
  RationalMatrix conditions(2, fa.coeffs.size());
  for (std::size_t k = 0; k < fa.coeffs.size(); ++k) {
    conditions(0, k) = fa.coeffs[k];
    conditions(1, k) = fi.coeffs[k];
  }
  const std::vector<RationalVector> ker = kernel(conditions);

  RationalVector coords(n * n);
  if (combination) {
    if (combination->size() != ker.size())
      throw InputError("combination", "combination needs " + std::to_string(ker.size()) + " coefficients");
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += (*combination)[j] * ker[j][k];
    if (is_zero_vector(coords)) throw InputError("combination", "combination selects the zero matrix");
  } else {
    coords = ker.front();
  }
  HermitianMatrix b = HermitianBasis(n).recompose(coords);

  EqualityQuery q{omega, a, b, Mode::Unchecked};
  Verdict v = classify_equality(q);
  return {std::move(q), std::move(v)};
}

}  // namespace mixdisc
