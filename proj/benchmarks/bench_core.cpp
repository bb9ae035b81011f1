#include <benchmark/benchmark.h>

#include "sdiep/constructor.hpp"
#include "sdiep/eigen.hpp"
#include "sdiep/rng.hpp"

namespace {

sdiep::Spectrum half_suleimanova(std::size_t n) {
  sdiep::Rng rng(n);
  std::vector<double> v(n);
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) total += v[i] = rng.exponential();
  v[0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) v[i] *= -0.5 / total;
  return sdiep::Spectrum(v);
}

void BM_Construct(benchmark::State& state) {
  const auto s = half_suleimanova(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::construct(s));
}

void BM_ConstructByProduct(benchmark::State& state) {
  const auto s = half_suleimanova(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::construct_by_product(s));
}

void BM_Feasibility(benchmark::State& state) {
  const auto s = half_suleimanova(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::feasibility(s));
}

void BM_SymEigenvalues(benchmark::State& state) {
  const auto m = sdiep::construct(half_suleimanova(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::sym_eigenvalues(m));
}

} // namespace

BENCHMARK(BM_Construct)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_ConstructByProduct)->RangeMultiplier(4)->Range(8, 128);
BENCHMARK(BM_Feasibility)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_SymEigenvalues)->RangeMultiplier(2)->Range(8, 128);
BENCHMARK_MAIN();
