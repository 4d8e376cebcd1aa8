#include <benchmark/benchmark.h>

#include <random>

#include "wald/monomial.hpp"
#include "wald/reference_checks.hpp"

static void BM_SymbolicPowerPoints(benchmark::State& state) {
  const std::vector<wald::VariableSet> pts{{0, 1}, {0, 2}, {1, 2}, {1, 3}};
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wald::symbolic_power(3, pts, m));
}
BENCHMARK(BM_SymbolicPowerPoints)->RangeMultiplier(2)->Range(1, 8);

static void BM_HilbertFunction(benchmark::State& state) {
  const std::vector<wald::VariableSet> pts{{0, 1}, {0, 2}, {1, 2}};
  const auto I = wald::symbolic_power(2, pts, 4);
  const unsigned t = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    if (state.range(1) == 0) {
      benchmark::DoNotOptimize(wald::hf_by_inclusion_exclusion(I, t));
    } else {
      benchmark::DoNotOptimize(wald::hf_by_enumeration(I, t));
    }
  }
}
BENCHMARK(BM_HilbertFunction)->ArgsProduct({{10, 40}, {0, 1}});

static void BM_DeltaSet(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<wald::MonomialIdeal> ideals;
  for (int i = 0; i < 16; ++i) ideals.push_back(wald::random_delta_ideal(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(wald::delta_set(ideals[i++ % ideals.size()]));
}
BENCHMARK(BM_DeltaSet);
