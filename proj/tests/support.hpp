#pragma once

#include <initializer_list>
#include <vector>

#include "mixdisc/harness.hpp"
#include "mixdisc/hermitian.hpp"

namespace testing {

using mixdisc::ComplexMatrix;
using mixdisc::GaussianRational;
using mixdisc::HermitianMatrix;
using mixdisc::Rational;

// Real symmetric matrix from integer rows.
inline HermitianMatrix real(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t n = rows.size();
  ComplexMatrix m(n, n);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = GaussianRational(x);
    ++i;
  }
  return HermitianMatrix(std::move(m));
}

inline HermitianMatrix diag(std::initializer_list<long> d) {
  std::vector<Rational> v;
  for (long x : d) v.emplace_back(x);
  return HermitianMatrix::diagonal(v);
}

inline HermitianMatrix eye(std::size_t n) { return HermitianMatrix::identity(n); }

inline Rational q(const char* text) { return Rational::parse(text); }

// Generator for trial `trial` of a fixed test seed.
inline mixdisc::InstanceGenerator gen(std::size_t n, std::size_t trial, std::uint64_t seed = 20240611,
                                     std::int64_t bound = 10) {
  mixdisc::GeneratorConfig c;
  c.n = n;
  c.seed = seed;
  c.entry_bound = bound;
  return mixdisc::InstanceGenerator(c, trial);
}

}  // namespace testing
