#include <benchmark/benchmark.h>

#include "pfb/fibered.hpp"
#include "pfb/homology.hpp"
#include "pfb/simplicial.hpp"

namespace {

using namespace pfb;

void BM_BettiCube(benchmark::State& state) {
  const TriangulatedCube cube = triangulated_cube(3, static_cast<unsigned>(state.range(0)));
  const Field field = state.range(1) == 0 ? Field::Rational : Field::GF2;
  for (auto _ : state) benchmark::DoNotOptimize(betti(cube.complex, field));
  state.counters["simplices"] = static_cast<double>(cube.complex.size());
}
BENCHMARK(BM_BettiCube)->ArgsProduct({{1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BettiSquareBoundary(benchmark::State& state) {
  const TriangulatedCube sq = triangulated_cube(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti(unite(sq.boundary, sq.cubical_subcomplex({{1, 1}}))));
}
BENCHMARK(BM_BettiSquareBoundary)->DenseRange(2, 8, 3)->Unit(benchmark::kMillisecond);

SimplicialMap polygon_cover(int k, int sheets) {
  auto polygon = [](int m) {
    std::vector<Simplex> edges;
    for (Vertex i = 0; i < m; ++i) edges.push_back({std::min<Vertex>(i, (i + 1) % m), std::max<Vertex>(i, (i + 1) % m)});
    return SimplicialComplex::from_simplices(edges);
  };
  SimplicialMap f;
  f.source = polygon(k * sheets);
  f.target = polygon(k);
  for (Vertex v = 0; v < k * sheets; ++v) f.vertex_map[v] = v % k;
  return f;
}

void BM_FiberedProduct(benchmark::State& state) {
  const SimplicialMap f = polygon_cover(6, 3);
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fibered_product(f, p));
}
BENCHMARK(BM_FiberedProduct)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SpectralInequality(benchmark::State& state) {
  const SimplicialMap f = polygon_cover(6, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_spectral_inequality(f, 2));
}
BENCHMARK(BM_SpectralInequality)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
