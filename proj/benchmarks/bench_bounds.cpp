#include <benchmark/benchmark.h>

#include "pfb/asymptotic.hpp"
#include "pfb/exact_bounds.hpp"

namespace {

using namespace pfb;

void BM_VarietyV(benchmark::State& state) {
  const Nat k = static_cast<Nat>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(variety_V(k, k, k, k, k + 1));
}
BENCHMARK(BM_VarietyV)->RangeMultiplier(4)->Range(1, 64);

void BM_PClosedRecursive(benchmark::State& state) {
  SetFormat f;
  f.chain = {3, 2, 2, 2};
  f.beta = 3;
  f.s = 12;
  f.m = static_cast<Nat>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pclosed_recursive(f));
}
BENCHMARK(BM_PClosedRecursive)->DenseRange(0, 12, 4);

void BM_HausdorffBetti(benchmark::State& state) {
  SetFormat f;
  f.chain = {3, 3, 2, 2};
  f.beta = 2;
  f.s = 5;
  f.d = 3;
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_betti(f, static_cast<Nat>(state.range(0))));
}
BENCHMARK(BM_HausdorffBetti)->DenseRange(0, 3);

void BM_QuantifierBound(benchmark::State& state) {
  QuantifierFormat q;
  q.n0 = 3;
  q.blocks.assign(static_cast<std::size_t>(state.range(0)), 3);
  q.inner.chain = {3 + 3 * q.blocks.size(), 2, 1, 2};
  q.inner.beta = 2;
  q.inner.s = 4;
  for (auto _ : state) benchmark::DoNotOptimize(quantifier_bound(q));
}
BENCHMARK(BM_QuantifierBound)->DenseRange(1, 4);

}  // namespace
