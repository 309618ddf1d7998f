#include <benchmark/benchmark.h>

#include "iwalab/expansion.hpp"
#include "iwalab/module.hpp"
#include "iwalab/random.hpp"

using namespace iwalab;

namespace {

GroupCase case_of(const benchmark::State& st) { return st.range(0) ? GroupCase::QUAT : GroupCase::GL2; }

void BM_GroupMul(benchmark::State& st) {
  const QuotientGroup G(PrimeConfig{5, 1, 2, 1, case_of(st), 0});
  Rng rng(1);
  const GroupIndex a = rng.below(G.order()), b = rng.below(G.order());
  for (auto _ : st) benchmark::DoNotOptimize(G.mul(a, b));
}
BENCHMARK(BM_GroupMul)->Arg(0)->Arg(1);

void BM_Expand(benchmark::State& st) {
  GroupAlgebra alg(PrimeConfig{5, 1, 2, 1, case_of(st), 0});
  const AlgebraElement x = alg.monomial({3, 4, 2});
  for (auto _ : st) benchmark::DoNotOptimize(expand(alg, x, 12));
}
BENCHMARK(BM_Expand)->Arg(0)->Arg(1);

void BM_MAdicChain(benchmark::State& st) {
  GroupAlgebra alg(PrimeConfig{5, 1, 2, 1, case_of(st), 0});
  TruncatedAlgebra V(alg, 8);
  for (auto _ : st) benchmark::DoNotOptimize(m_adic_chain(V, 8));
}
BENCHMARK(BM_MAdicChain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExponentProfile(benchmark::State& st) {
  GroupAlgebra alg(PrimeConfig{5, 1, 2, 1, case_of(st), 0});
  TruncatedAlgebra V(alg, 6);
  const FiniteModule m = truncated_regular_module(V);
  const IdealSpec J = default_ideal("mixed", alg.field());
  for (auto _ : st) benchmark::DoNotOptimize(measure_exponents(alg.field(), m, J, 1));
}
BENCHMARK(BM_ExponentProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
