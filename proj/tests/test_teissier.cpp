#include <doctest.h>

#include "mixdisc/linalg.hpp"
#include "mixdisc/positivity.hpp"
#include "mixdisc/teissier.hpp"
#include "support.hpp"

using namespace mixdisc;
using testing::diag;
using testing::eye;
using testing::q;
using testing::real;

namespace {

const OmegaTuple kEmpty2(2, {});

OmegaTuple psd_omega(InstanceGenerator& g, bool pd = false) {
  std::vector<HermitianMatrix> items;
  for (std::size_t k = 0; k + 2 < g.n(); ++k) items.push_back(pd ? g.psd(g.n()) : g.psd_from_profile());
  return OmegaTuple(g.n(), std::move(items));
}

HermitianMatrix block_diag(const HermitianMatrix& x, const HermitianMatrix& y) {
  const std::size_t a = x.dim(), n = a + y.dim();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < y.dim(); ++j) m(a + i, a + j) = y(i, j);
  return HermitianMatrix(std::move(m));
}

}  // namespace

TEST_CASE("alexandrov examples") {
  const AlexandrovResult r = alexandrov_verify(kEmpty2, diag({1, 0}), diag({0, 1}));
  CHECK(r.lhs == Rational(1));
  CHECK(r.rhs == Rational(0));
  CHECK(r.holds);

  const AlexandrovResult same = alexandrov_verify(kEmpty2, diag({2, 3}), diag({2, 3}));
  CHECK(same.lhs == same.rhs);
  CHECK(same.holds);

  const AlexandrovResult neg = alexandrov_verify(kEmpty2, eye(2), diag({1, -1}));
  CHECK(neg.lhs == Rational(0));
  CHECK(neg.rhs == Rational(-4));
  CHECK(neg.holds);

  CHECK_THROWS_AS(alexandrov_verify(kEmpty2, diag({1, -1}), eye(2)), PreconditionError);
  CHECK_THROWS_AS(alexandrov_verify(OmegaTuple(3, {diag({1, -1, 1})}), eye(3), eye(3)), PreconditionError);
}

TEST_CASE("mode parsing") {
  CHECK(parse_mode("b1") == Mode::B1);
  CHECK(parse_mode("B2") == Mode::B2);
  CHECK(parse_mode("Unchecked") == Mode::Unchecked);
  CHECK_THROWS_AS(parse_mode("b3"), InputError);
}

TEST_CASE("proportional inputs give the witness (3, -2)") {
  const OmegaTuple omega(3, {diag({1, 2, 3})});
  const HermitianMatrix a = real({{2, 1, 0}, {1, 2, 0}, {0, 0, 1}});
  const Verdict v = classify_equality({omega, a, q("3/2") * a, Mode::B2});
  CHECK(v.tag == VerdictTag::EqualityProportional);
  REQUIRE(v.witness);
  CHECK(v.witness->s0 == Rational(3));
  CHECK(v.witness->t0 == Rational(-2));
  const GramMatrix g = gram(omega);
  const FunctionalVec fa = functional(g, a), fb = functional(g, q("3/2") * a);
  for (std::size_t k = 0; k < fa.coeffs.size(); ++k) CHECK((v.witness->s0 * fa.coeffs[k] + v.witness->t0 * fb.coeffs[k]).is_zero());
}

TEST_CASE("n = 2 counterexample instance") {
  const Verdict v = classify_equality({kEmpty2, diag({1, 0}), real({{0, 1}, {1, 0}}), Mode::Unchecked});
  CHECK(v.tag == VerdictTag::EqualityNonProportionalOutsideHypotheses);
  CHECK(v.lhs == Rational(0));
  CHECK(v.rhs == Rational(0));
  CHECK(v.flags.aa == Rational(0));
  CHECK(v.flags.bb == Rational(-2));
  CHECK_FALSE(v.flags.b1_holds());
  CHECK_FALSE(v.flags.b2_holds());
  const std::vector<std::string> expected{"B1 fails: D(Omega,b,b) = -2 < 0", "B2 fails: D(Omega,a,a) = 0"};
  CHECK(v.flags.failures() == expected);
  REQUIRE(v.fa);
  REQUIRE(v.fb);
  // F_A: C ↦ c22, F_B: C ↦ −(c12 + c21).
  CHECK(v.fa->coeffs == RationalVector{0, 1, 0, 0});
  CHECK(v.fb->coeffs == RationalVector{0, 0, -2, 0});

  // The same instance under a claimed hypothesis set is refused, not classified.
  CHECK(classify_equality({kEmpty2, diag({1, 0}), real({{0, 1}, {1, 0}}), Mode::B1}).tag ==
        VerdictTag::HypothesisViolated);
  CHECK(classify_equality({kEmpty2, diag({1, 0}), real({{0, 1}, {1, 0}}), Mode::B2}).tag ==
        VerdictTag::HypothesisViolated);
}

TEST_CASE("non-proportional b under B2 is strict") {
  std::size_t strict = 0;
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t t = 0; t < 20; ++t) {
      auto g = testing::gen(n, t, 70);
      const OmegaTuple omega = psd_omega(g, true);
      const HermitianMatrix a = g.psd(n);
      const HermitianMatrix b = g.hermitian();
      if (matrices_proportional(a, b)) continue;
      const Verdict v = classify_equality({omega, a, b, Mode::B2});
      CHECK(v.tag == VerdictTag::StrictInequality);
      CHECK(v.gap().sign() > 0);
      ++strict;
    }
  CHECK(strict > 0);
}

TEST_CASE("scale equivariance") {
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t t = 0; t < 20; ++t) {
      auto g = testing::gen(n, t, 71);
      const OmegaTuple omega = psd_omega(g);
      const HermitianMatrix a = g.psd_from_profile();
      // Alternate between proportional (equality) and generic b.
      const HermitianMatrix b = t % 2 == 0 ? g.nonzero_rational() * a : g.hermitian();
      const Rational lambda = g.nonzero_rational().abs(), mu = g.nonzero_rational().abs();
      for (Mode mode : {Mode::B1, Mode::B2, Mode::Unchecked}) {
        const Verdict v = classify_equality({omega, a, b, mode});
        const Verdict w = classify_equality({omega, lambda * a, mu * b, mode});
        CHECK(v.tag == w.tag);
        CHECK(v.witness.has_value() == w.witness.has_value());
        if (v.witness && w.witness) {
          // s0 F_A + t0 F_B = 0 becomes (s0/λ) F_{λA} + (t0/μ) F_{μB} = 0, up to scaling.
          CHECK(v.witness->s0 * w.witness->t0 * mu == v.witness->t0 * w.witness->s0 * lambda);
        }
      }
    }
}

TEST_CASE("counterexample generator") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const Counterexample c = counterexample_generate(n);
    const Verdict& v = c.verdict;
    CAPTURE(n);
    CHECK(v.tag == VerdictTag::EqualityNonProportionalOutsideHypotheses);
    CHECK(v.lhs == v.rhs);
    CHECK(v.flags.bb.sign() < 0);
    CHECK_FALSE(v.flags.b1_holds());
    CHECK_FALSE(v.flags.b2_holds());
    CHECK_FALSE(c.query.b.is_zero());
    CHECK(pairing(c.query.omega, c.query.a, c.query.b).is_zero());
    CHECK(pairing(c.query.omega, eye(n), c.query.b).is_zero());
    // Re-running the classifier on the emitted query gives the same verdict.
    CHECK(classify_equality(c.query).tag == v.tag);
  }
  const Counterexample c2 = counterexample_generate(2);
  CHECK(c2.query.a == diag({1, 0}));
  CHECK(c2.query.b(1, 1).is_zero());
  CHECK(c2.query.b == real({{0, 1}, {1, 0}}));
  CHECK(pairing(c2.query.omega, c2.query.b, c2.query.b) == Rational(-2));

  CHECK_THROWS_AS(counterexample_generate(1), InputError);
  CHECK_THROWS_AS(counterexample_generate(3, eye(3)), PreconditionError);
  CHECK_THROWS_AS(counterexample_generate(3, std::nullopt, RationalVector(7)), InputError);
  CHECK_THROWS_AS(counterexample_generate(3, std::nullopt, RationalVector(3)), InputError);
}

TEST_CASE("replacing a by I breaks equality") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Counterexample c = counterexample_generate(n);
    const Verdict v = classify_equality({c.query.omega, eye(n), c.query.b, Mode::Unchecked});
    CHECK(v.tag == VerdictTag::StrictInequality);
    CHECK(v.gap().sign() > 0);
  }
}

TEST_CASE("random rank-1 counterexamples") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t < 5; ++t) {
      auto g = testing::gen(n, t, 72);
      std::vector<GaussianRational> v(n);
      for (auto& x : v) x = g.nonzero_rational();
      RationalVector comb(n * n - 2);
      for (auto& x : comb) x = g.nonzero_rational();
      const Counterexample c = counterexample_generate(n, HermitianMatrix::outer(v), comb);
      CHECK(c.verdict.tag == VerdictTag::EqualityNonProportionalOutsideHypotheses);
      CHECK(c.verdict.flags.bb.sign() < 0);
    }
}

TEST_CASE("kt-verify") {
  const std::vector<Multiplicity> none;
  const KtReport prop = kt_torus_verify(none, diag({1, 2}), diag({2, 4}));
  CHECK(prop.verdict.tag == VerdictTag::EqualityProportional);
  CHECK(prop.matrices_proportional);

  const KtReport cx = kt_torus_verify(none, diag({1, 0}), real({{0, 1}, {1, 0}}));
  CHECK(cx.verdict.tag == VerdictTag::EqualityNonProportionalOutsideHypotheses);
  CHECK_FALSE(cx.matrices_proportional);

  const std::vector<Multiplicity> bad{{diag({1, -1, 1}), 1}};
  CHECK_THROWS_AS(kt_torus_verify(bad, eye(3), eye(3)), PreconditionError);
  CHECK_THROWS_AS(kt_torus_verify(none, diag({1, -1}), eye(2)), PreconditionError);

  // PD prefix: HIT holds, so any detected equality forces α ∝ β.
  std::size_t equalities = 0;
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t t = 0; t < 10; ++t) {
      auto g = testing::gen(n, t, 73);
      const std::vector<Multiplicity> prefix{{g.psd(n), static_cast<int>(n - 2)}};
      const HermitianMatrix alpha = g.psd(n);
      const HermitianMatrix beta = t % 2 == 0 ? g.nonzero_rational() * alpha : g.hermitian();
      const KtReport r = kt_torus_verify(prefix, alpha, beta);
      CHECK(r.prefix_hodge_index);
      CHECK(r.verdict.tag != VerdictTag::TheoremViolation);
      if (r.verdict.lhs == r.verdict.rhs) {
        ++equalities;
        CHECK(r.matrices_proportional);
      }
    }
  CHECK(equalities > 0);
}

TEST_CASE("s_k chain examples") {
  const SequenceReport strict = sk_chain(eye(2), diag({1, 2}));
  CHECK(strict.s == RationalVector{4, 3, 2});
  CHECK(strict.equality_positions.empty());
  CHECK(strict.log_concave);
  CHECK_FALSE(strict.violation);

  const SequenceReport split = sk_chain(diag({1, 0}), diag({0, 1}));
  CHECK(split.s == RationalVector{0, 1, 0});
  CHECK(split.equality_positions.empty());

  // β = 2α: s_k = 2^{n-k} s_n.
  const HermitianMatrix alpha = real({{2, 1, 0}, {1, 2, 0}, {0, 0, 1}});
  const SequenceReport prop = sk_chain(alpha, Rational(2) * alpha);
  const Rational sn = prop.s.back();
  CHECK(sn == Rational(6) * det(alpha.matrix()).re);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(prop.s[k] == Rational(1L << (3 - k)) * sn);
  CHECK(prop.equality_positions == std::vector<std::size_t>{1, 2});
  REQUIRE(prop.end_functionals_proportional);
  CHECK(*prop.end_functionals_proportional);

  CHECK_THROWS_AS(sk_chain(diag({1, -1}), eye(2)), PreconditionError);
  CHECK_THROWS_AS(sk_chain(eye(2), eye(3)), InputError);
}

TEST_CASE("full equality chains give proportional end functionals") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t < 8; ++t) {
      auto g = testing::gen(n, t, 74);
      const HermitianMatrix alpha = g.psd(n);
      const SequenceReport r = sk_chain(alpha, g.nonzero_rational().abs() * alpha);
      CHECK(r.equality_positions.size() == n - 1);
      REQUIRE(r.end_functionals_proportional);
      CHECK(*r.end_functionals_proportional);
      CHECK_FALSE(r.violation);
    }
  // Block-diagonal pairs sharing a common factor: α = P ⊕ P, β = 3P ⊕ 3P.
  for (std::size_t t = 0; t < 5; ++t) {
    auto g = testing::gen(2, t, 75);
    const HermitianMatrix p = g.psd(2);
    const SequenceReport r = sk_chain(block_diag(p, p), block_diag(Rational(3) * p, Rational(3) * p));
    CHECK(r.equality_positions.size() == 3);
    REQUIRE(r.end_functionals_proportional);
    CHECK(*r.end_functionals_proportional);
  }
}

TEST_CASE("log-concavity for PSD pairs") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t < 15; ++t) {
      auto g = testing::gen(n, t, 76);
      const SequenceReport r = sk_chain(g.psd_from_profile(), g.psd_from_profile());
      CHECK(r.log_concave);
      CHECK_FALSE(r.violation);
    }
}
