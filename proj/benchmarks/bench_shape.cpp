#include <benchmark/benchmark.h>

#include "wald/bound.hpp"
#include "wald/shape.hpp"

static void BM_AhpStar(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const auto shape = wald::star_shape(n, n / 2 + 1, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(wald::ahp_simplex(shape));
}
BENCHMARK(BM_AhpStar)->DenseRange(3, 9, 2);

static void BM_StarGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wald::verify_star_formula(6, 8));
}
BENCHMARK(BM_StarGrid)->Unit(benchmark::kMillisecond);

static void BM_BoundFiveCrosses(benchmark::State& state) {
  const wald::Configuration cfg(3, {{wald::SimplexShape(3, {wald::Rat(1), wald::Rat(2)}), 5}});
  for (auto _ : state) benchmark::DoNotOptimize(wald::waldschmidt_bound(cfg));
}
BENCHMARK(BM_BoundFiveCrosses);
