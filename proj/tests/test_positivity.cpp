#include <doctest.h>

#include "mixdisc/linalg.hpp"
#include "mixdisc/positivity.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mixdisc;
using testing::diag;
using testing::eye;
using testing::real;

namespace {

// Mix of arbitrary Hermitian and PSD samples of every rank, so both answers
// of the oracle are exercised.
HermitianMatrix sample(InstanceGenerator& g, std::size_t t) {
  switch (t % 4) {
    case 0: return g.hermitian();
    case 1: return g.psd(g.n());
    case 2: return g.psd(static_cast<std::size_t>(g.rng().uniform(0, static_cast<std::int64_t>(g.n()) - 1)));
    default: return g.psd(g.n()) - Rational(static_cast<long>(g.rng().uniform(0, 3))) * eye(g.n());
  }
}

ConeQuery query(std::size_t m, std::vector<HermitianMatrix> factors, HermitianMatrix eta, HermitianMatrix alpha) {
  ConeQuery q{m, std::move(factors), std::move(eta), std::move(alpha)};
  q.validate();
  return q;
}

}  // namespace

TEST_CASE("is_psd examples") {
  const PositivityReport id = is_psd(eye(3));
  CHECK(id.kind == PositivityKind::PD);
  CHECK(id.rank == 3);

  const PositivityReport r1 = is_psd(diag({1, 0}));
  CHECK(r1.kind == PositivityKind::PSDRankDeficient);
  CHECK(r1.rank == 1);

  const PositivityReport no = is_psd(real({{0, 1}, {1, 0}}));
  CHECK(no.kind == PositivityKind::NotPSD);
  REQUIRE(no.failing_index);
  CHECK(*no.failing_index == 2);
  CHECK(no.coefficients == RationalVector{1, 0, -1});

  CHECK(is_psd(HermitianMatrix::zero(2)).rank == 0);
  CHECK(to_string(PositivityKind::PSDRankDeficient) == "PSD_rank_deficient");
}

TEST_CASE("characteristic coefficients are elementary symmetric functions") {
  // Eigenvalues 1, 2, 3: e = (1, 6, 11, 6).
  CHECK(char_poly_elementary(diag({1, 2, 3})) == RationalVector{1, 6, 11, 6});
  ComplexMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = GaussianRational(1, 1);
  m(1, 0) = GaussianRational(1, -1);
  m(1, 1) = 3;
  CHECK(char_poly_elementary(HermitianMatrix(m)) == RationalVector{1, 5, 4});
}

TEST_CASE("agreement with the principal-minor test") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t psd_seen = 0, not_psd_seen = 0;
    for (std::size_t t = 0; t < 80; ++t) {
      auto g = testing::gen(n, t, 60);
      const HermitianMatrix a = sample(g, t);
      const bool expected = oracle::principal_minors_psd(a);
      CHECK(is_psd(a).psd() == expected);
      (expected ? psd_seen : not_psd_seen)++;
    }
    CHECK(psd_seen > 0);
    CHECK(not_psd_seen > 0);
  }
}

TEST_CASE("PSD closure properties") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t t = 0; t < 20; ++t) {
      auto g = testing::gen(n, t, 61);
      const HermitianMatrix a = g.psd_from_profile(), b = g.psd_from_profile();
      const HermitianMatrix pd = g.psd(n);
      CHECK(is_psd(pd).pd());
      CHECK(is_psd(pd).psd());
      CHECK(is_psd(a + b).psd());
      ComplexMatrix m(n, n);
      do {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = g.gaussian();
      } while (det(m).is_zero());
      const PositivityReport before = is_psd(a);
      const PositivityReport after = is_psd(congruence(m.adjoint(), a));
      CHECK(after.kind == before.kind);
      CHECK(after.rank == before.rank);
      const HermitianMatrix h = g.hermitian();
      CHECK(is_psd(congruence(m.adjoint(), h)).psd() == is_psd(h).psd());
    }
}

TEST_CASE("m-positivity examples") {
  const MPositivity pos = m_positivity_check(query(1, {eye(3)}, eye(3), eye(3)));
  CHECK(pos.positive());
  CHECK(pos.values == RationalVector{6, 6});

  const MPositivity fail = m_positivity_check(query(1, {eye(3)}, eye(3), diag({1, 1, -1})));
  CHECK(fail.values == RationalVector{2, -2});
  REQUIRE(fail.fails_at);
  CHECK(*fail.fails_at == 2);

  const MPositivity neg = m_positivity_check(query(0, {}, eye(3), -eye(3)));
  REQUIRE(neg.fails_at);
  CHECK(*neg.fails_at == 1);
  CHECK(neg.values[0].sign() < 0);
}

TEST_CASE("cone membership examples") {
  CHECK(cone_gamma_membership(query(1, {eye(3)}, eye(3), diag({1, 2, 3}))).membership == ConeMembership::Interior);
  const ConeReport boundary = cone_gamma_membership(query(1, {eye(4)}, eye(4), diag({1, 0, 0, 0})));
  CHECK(boundary.membership == ConeMembership::ClosureBoundary);
  CHECK(boundary.certificate.values.back().is_zero());
  CHECK(cone_gamma_membership(query(1, {eye(3)}, eye(3), diag({1, 1, -1}))).membership == ConeMembership::Outside);
  CHECK(to_string(ConeMembership::ClosureBoundary) == "Closure_boundary");
}

TEST_CASE("cone query validation") {
  CHECK_THROWS_AS(query(2, {eye(3), eye(3)}, eye(3), eye(3)), InputError);  // m > n - 2
  CHECK_THROWS_AS(query(1, {}, eye(3), eye(3)), InputError);
  CHECK_THROWS_AS(query(1, {diag({1, 1, 0})}, eye(3), eye(3)), InputError);
  CHECK_THROWS_AS(query(1, {eye(3)}, eye(2), eye(3)), InputError);
}

TEST_CASE("cone convexity and the nef analog") {
  std::size_t interior_pairs = 0;
  for (std::size_t n = 3; n <= 4; ++n)
    for (std::size_t t = 0; t < 25; ++t) {
      auto g = testing::gen(n, t, 62);
      const std::size_t m = static_cast<std::size_t>(g.rng().uniform(0, static_cast<std::int64_t>(n) - 2));
      std::vector<HermitianMatrix> factors;
      for (std::size_t k = 0; k < m; ++k) factors.push_back(g.psd(n));
      const HermitianMatrix eta = g.psd(n);
      const HermitianMatrix a = g.hermitian() + Rational(static_cast<long>(g.rng().uniform(0, 40))) * eye(n);
      const HermitianMatrix b = g.hermitian() + Rational(static_cast<long>(g.rng().uniform(0, 40))) * eye(n);
      const auto ma = cone_gamma_membership(query(m, factors, eta, a)).membership;
      const auto mb = cone_gamma_membership(query(m, factors, eta, b)).membership;
      if (ma == ConeMembership::Interior && mb == ConeMembership::Interior) {
        ++interior_pairs;
        CHECK(cone_gamma_membership(query(m, factors, eta, a + b)).membership == ConeMembership::Interior);
      }

      const HermitianMatrix nef = g.psd_from_profile();
      CHECK(cone_gamma_membership(query(m, factors, eta, nef)).membership != ConeMembership::Outside);
    }
  CHECK(interior_pairs > 0);
}
