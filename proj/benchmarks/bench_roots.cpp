#include <benchmark/benchmark.h>

#include "wald/roots.hpp"

using wald::Poly;
using wald::Rat;

static void BM_CrossRoot(benchmark::State& state) {
  const Poly p({Rat(5), Rat(-5), Rat(0), Rat(1, 6)});
  const Rat eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wald::largest_real_root(p, eps));
}
BENCHMARK(BM_CrossRoot)->Arg(1000)->Arg(100000000)->Arg(1000000000000000000);

static void BM_SturmChain(benchmark::State& state) {
  Poly p = Poly::constant(Rat(1));
  for (long k = 1; k <= state.range(0); ++k) p *= Poly({Rat(-k, 3), Rat(1)});
  for (auto _ : state) benchmark::DoNotOptimize(wald::sturm_count(p, Rat(-100), Rat(100)));
}
BENCHMARK(BM_SturmChain)->DenseRange(2, 10, 4);
