#include <benchmark/benchmark.h>

#include "wordrep/random_words.hpp"
#include "wordrep/wordrep.hpp"

namespace {

using namespace wordrep;

void BM_CubeWord(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cube_word(k));
}
BENCHMARK(BM_CubeWord)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RepresentsCube(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  auto w = cube_word(k);
  auto g = cube(k);
  for (auto _ : state) benchmark::DoNotOptimize(represents(w, g));
}
BENCHMARK(BM_RepresentsCube)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ProductKn(benchmark::State& state) {
  Rng rng(1);
  auto w = random_uniform_word(8, 3, rng);
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_kn_word(w, n));
}
BENCHMARK(BM_ProductKn)->Arg(2)->Arg(4)->Arg(8);

// Exhaustion of the 3-prism at k = 2, with and without symmetry reductions.
void BM_PrismExhaustion(benchmark::State& state) {
  auto g = cartesian_product(complete(3), complete(2));
  SearchOptions options;
  options.automorphism_reduction = state.range(0) != 0;
  options.reversal_reduction = state.range(0) != 0;
  std::uint64_t explored = 0;
  for (auto _ : state) explored = is_k_representable(g, 2, options).stats.explored;
  state.counters["explored"] = static_cast<double>(explored);
}
BENCHMARK(BM_PrismExhaustion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
