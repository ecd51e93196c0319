#include <benchmark/benchmark.h>

#include "mixdisc/harness.hpp"
#include "mixdisc/hodge.hpp"
#include "mixdisc/mixed_disc.hpp"
#include "mixdisc/teissier.hpp"

using namespace mixdisc;

namespace {

GeneratorConfig config(std::size_t n) {
  GeneratorConfig c;
  c.n = n;
  c.seed = 7;
  return c;
}

MatrixTuple random_tuple(std::size_t n) {
  InstanceGenerator g(config(n), 0);
  std::vector<HermitianMatrix> items;
  for (std::size_t k = 0; k < n; ++k) items.push_back(g.hermitian());
  return MatrixTuple(std::move(items));
}

OmegaTuple random_omega(std::size_t n) {
  InstanceGenerator g(config(n), 1);
  std::vector<HermitianMatrix> items;
  for (std::size_t k = 0; k + 2 < n; ++k) items.push_back(g.psd(n));
  return OmegaTuple(n, std::move(items));
}

void BM_MixedDisc(benchmark::State& state) {
  const MatrixTuple t = random_tuple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_disc(t));
}
BENCHMARK(BM_MixedDisc)->DenseRange(2, 6);

void BM_MixedDiscOracle(benchmark::State& state) {
  const MatrixTuple t = random_tuple(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_disc_oracle(t));
}
BENCHMARK(BM_MixedDiscOracle)->DenseRange(2, 5);

void BM_Gram(benchmark::State& state) {
  const OmegaTuple omega = random_omega(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram(omega));
}
BENCHMARK(BM_Gram)->DenseRange(2, 5);

void BM_HodgeIndex(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const OmegaTuple omega = random_omega(n);
  InstanceGenerator g(config(n), 2);
  const HermitianMatrix eta = g.psd(n);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_index_check(omega, eta));
}
BENCHMARK(BM_HodgeIndex)->DenseRange(2, 4);

void BM_Classify(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const OmegaTuple omega = random_omega(n);
  InstanceGenerator g(config(n), 3);
  const HermitianMatrix a = g.psd(n);
  const HermitianMatrix b = g.hermitian();
  for (auto _ : state) benchmark::DoNotOptimize(classify_equality({omega, a, b, Mode::Unchecked}));
}
BENCHMARK(BM_Classify)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
