#include <doctest.h>

#include <sstream>

#include "mixdisc/linalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mixdisc;
using testing::diag;
using testing::q;

TEST_CASE("rational canonical form") {
  CHECK(q("6/4").str() == "3/2");
  CHECK(q("-6/4").str() == "-3/2");
  CHECK(q("4/2").str() == "2");
  CHECK(q("0/7").str() == "0");
  CHECK(q("+5").str() == "5");
  CHECK(q("3/2").denominator() == 2);
  CHECK(q("1/3") + q("1/6") == q("1/2"));
  CHECK(q("2/3") * q("3/4") == q("1/2"));
  CHECK(q("1/2") / q("-1/4") == Rational(-2));
  CHECK(q("1/3") < q("1/2"));
  CHECK(q("-7/3").abs() == q("7/3"));
  CHECK(q("-2/5").inverse() == q("-5/2"));
  CHECK(factorial(5) == Rational(120));
  std::ostringstream os;
  os << q("-10/4");
  CHECK(os.str() == "-5/2");
}

TEST_CASE("rational parse rejects malformed text") {
  for (const char* bad : {"", "1/", "/2", "1.5", "a", "1/2/3", "1 /2", "--1", "1/-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), InputError);
  }
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("rational arithmetic stays exact past machine range") {
  Rational x(1);
  for (int k = 0; k < 40; ++k) x *= q("1000000007/3");
  for (int k = 0; k < 40; ++k) x /= q("1000000007/3");
  CHECK(x == Rational(1));
}

TEST_CASE("gaussian rationals") {
  const GaussianRational z(q("1/2"), q("-3"));
  CHECK(z.conj().conj() == z);
  CHECK(z.norm2() == q("37/4"));
  CHECK(GaussianRational().norm2().is_zero());
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK((z / z) == GaussianRational(1));
  CHECK(z * z.conj() == GaussianRational(z.norm2()));
  CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("det examples") {
  CHECK(det(ComplexMatrix::identity(3)) == GaussianRational(1));
  CHECK(det(diag({2, 3}).matrix()) == GaussianRational(6));
  ComplexMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = GaussianRational::i();
  m(1, 0) = -GaussianRational::i();
  m(1, 1) = 1;
  CHECK(det(m) == GaussianRational(0));
  CHECK_THROWS_AS(det(ComplexMatrix(2, 3)), InputError);
}

TEST_CASE("det agrees with cofactor expansion") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t t = 0; t < 50; ++t) {
      auto g = testing::gen(n, t);
      ComplexMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g.gaussian();
      const GaussianRational d = det(m);
      CHECK(d == oracle::laplace_det(m));
      if (n <= 3) {
        const HermitianMatrix h = g.hermitian();
        CHECK(det(h.matrix()).is_real());
      }
    }
}

TEST_CASE("det is multiplicative") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t t = 0; t < 20; ++t) {
      auto g = testing::gen(n, t, 77);
      ComplexMatrix a(n, n), b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = g.gaussian();
          b(i, j) = g.gaussian();
        }
      CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("basis ordering and decomposition examples") {
  const HermitianBasis b2(2);
  REQUIRE(b2.size() == 4);
  CHECK(b2.element(0) == diag({1, 0}));
  CHECK(b2.element(1) == diag({0, 1}));
  CHECK(b2.element(2) == testing::real({{0, 1}, {1, 0}}));
  ComplexMatrix k(2, 2);
  k(0, 1) = GaussianRational::i();
  k(1, 0) = -GaussianRational::i();
  CHECK(b2.element(3) == HermitianMatrix(k));

  CHECK(b2.decompose(testing::eye(2)) == RationalVector{1, 1, 0, 0});
  CHECK(b2.decompose(testing::real({{0, 1}, {1, 0}})) == RationalVector{0, 0, 1, 0});
  // [[0,i],[-i,0]] is K_12 itself under K_ij = i(E_ij - E_ji).
  CHECK(b2.decompose(HermitianMatrix(k)) == RationalVector{0, 0, 0, 1});
  CHECK(b2.decompose(-HermitianMatrix(k)) == RationalVector{0, 0, 0, -1});

  const HermitianBasis b3(3);
  // E_11, E_22, E_33, S_12, K_12, S_13, K_13, S_23, K_23
  CHECK(b3.element(5)(0, 2) == GaussianRational(1));
  CHECK(b3.element(8)(1, 2) == GaussianRational::i());
  CHECK_THROWS_AS(b3.decompose(testing::eye(2)), InputError);
  CHECK_THROWS_AS(b3.recompose(RationalVector(4)), InputError);
}

TEST_CASE("decompose/recompose round trip") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const HermitianBasis basis(n);
    for (std::size_t t = 0; t < 40; ++t) {
      auto g = testing::gen(n, t, 5);
      const HermitianMatrix a = g.hermitian();
      const RationalVector c = basis.decompose(a);
      CHECK(c.size() == n * n);
      CHECK(basis.recompose(c) == a);
      HermitianMatrix sum = HermitianMatrix::zero(n);
      for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * basis.element(k);
      CHECK(sum == a);
    }
  }
}

TEST_CASE("basis is linearly independent") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const HermitianBasis basis(n);
    std::vector<RationalVector> cols;
    for (std::size_t k = 0; k < basis.size(); ++k) cols.push_back(basis.decompose(basis.element(k)));
    CHECK(rank(from_columns(cols, n * n)) == n * n);
  }
}

TEST_CASE("hermitian invariant is enforced") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 2;
  CHECK_THROWS_AS(HermitianMatrix{m}, InputError);
  ComplexMatrix d(2, 2);
  d(0, 0) = GaussianRational::i();
  CHECK_THROWS_AS(HermitianMatrix{d}, InputError);
  CHECK_THROWS_AS(HermitianMatrix{ComplexMatrix(2, 3)}, InputError);
  CHECK_THROWS_AS(HermitianMatrix{ComplexMatrix(0, 0)}, InputError);
}

TEST_CASE("hermitian closure under sums, scalings and congruence") {
  for (std::size_t t = 0; t < 30; ++t) {
    auto g = testing::gen(3, t, 11);
    const HermitianMatrix a = g.hermitian();
    const HermitianMatrix b = g.hermitian();
    const Rational s = g.rational();
    // Construction re-validates, so reaching the checks proves closure.
    const HermitianMatrix sum((a + s * b).matrix());
    CHECK(HermitianMatrix(a.matrix().adjoint()) == a);
    ComplexMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = g.gaussian();
    const HermitianMatrix c(congruence(m, a).matrix());
    CHECK(sum.dim() == 3);
    CHECK(c.dim() == 3);
  }
}

TEST_CASE("rref, kernel and congruence diagonalization") {
  RationalMatrix m(2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank(m) == 1);
  const auto k = kernel(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero_vector(mat_vec(m, v)));

  for (std::size_t t = 0; t < 30; ++t) {
    auto g = testing::gen(5, t, 3);
    const std::size_t n = 5;
    RationalMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        // Sparse with zero diagonal often, to hit the off-diagonal pivot.
        const Rational x = g.rng().uniform(0, 2) == 0 ? g.rational() : Rational(0);
        s(i, j) = i == j && t % 2 == 0 ? Rational(0) : x;
        s(j, i) = s(i, j);
      }
    const Congruence c = congruence_diagonalize(s);
    const RationalMatrix d = c.transform.transpose() * s * c.transform;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(d(i, j) == (i == j ? c.diagonal[i] : Rational(0)));
    CHECK(rank(c.transform) == n);
  }
  CHECK_THROWS_AS(congruence_diagonalize(RationalMatrix(2, 2, {0, 1, 2, 0})), InputError);
}
