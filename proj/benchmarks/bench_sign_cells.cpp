#include <benchmark/benchmark.h>

#include "pfb/sign_cells.hpp"

namespace {

using namespace pfb;

PolynomialSystem circle(unsigned n) {
  PolynomialSystem sys;
  sys.n = n;
  sys.box.assign(n, {Rational(-2), Rational(2)});
  Polynomial p;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 2;
    p.terms.push_back({e, Rational(1)});
  }
  p.terms.push_back({std::vector<unsigned>(n, 0), Rational(-1)});
  sys.polys.push_back(p);
  return sys;
}

void BM_EnumerateSignsPlane(benchmark::State& state) {
  const PolynomialSystem sys = circle(2);
  const auto R = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_signs(sys, R));
  state.counters["nodes"] = static_cast<double>((R + 1) * (R + 1));
}
BENCHMARK(BM_EnumerateSignsPlane)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_EnumerateSignsSpace(benchmark::State& state) {
  const PolynomialSystem sys = circle(3);
  const auto R = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_signs(sys, R));
}
BENCHMARK(BM_EnumerateSignsSpace)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_CheckAgainstBound(benchmark::State& state) {
  const PolynomialSystem sys = circle(2);
  const SignCellReport rep = enumerate_signs(sys, 64);
  for (auto _ : state) benchmark::DoNotOptimize(check_against_bound(sys, rep));
}
BENCHMARK(BM_CheckAgainstBound)->Unit(benchmark::kMillisecond);

}  // namespace
