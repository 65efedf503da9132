#include <benchmark/benchmark.h>

#include <random>

#include "apx/bounds.hpp"
#include "apx/concentration.hpp"
#include "apx/counting.hpp"
#include "apx/crosscheck.hpp"
#include "apx/fourier.hpp"
#include "apx/search.hpp"

namespace {

apx::SubsetMask sample_set(std::int64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return apx::random_symmetric_subset(rng, apx::GroupSpec({n}));
}

}  // namespace

static void BM_DirectProb(benchmark::State& state) {
  const auto s = sample_set(state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(apx::direct_prob(s));
  state.SetComplexityN(s.size());
}
BENCHMARK(BM_DirectProb)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

static void BM_DirectT3(benchmark::State& state) {
  const auto s = sample_set(state.range(0) + 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(apx::direct_t3(s));
}
BENCHMARK(BM_DirectT3)->RangeMultiplier(4)->Range(16, 1024);

static void BM_DftIndicator(benchmark::State& state) {
  const auto s = sample_set(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(apx::dft_indicator(s));
}
BENCHMARK(BM_DftIndicator)->RangeMultiplier(2)->Range(64, 512);

static void BM_CayleyTriangles(benchmark::State& state) {
  auto s = sample_set(state.range(0), 4);
  s.erase(0);
  for (auto _ : state) benchmark::DoNotOptimize(apx::cayley_triangles_direct(s));
}
BENCHMARK(BM_CayleyTriangles)->RangeMultiplier(4)->Range(16, 1024);

static void BM_ExtremalSearch(benchmark::State& state) {
  const apx::GroupSpec g({state.range(0)});
  apx::SearchOptions options;
  options.canonicalize = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(apx::extremal_search(g, g.order() / 3, apx::Objective::prob, options));
}
BENCHMARK(BM_ExtremalSearch)->ArgsProduct({{24, 30, 36}, {0, 1}})->Unit(benchmark::kMillisecond);

static void BM_ConcentrationScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(apx::concentration_scan(state.range(0), 3, apx::make_rational(99, 1000), 1));
}
BENCHMARK(BM_ConcentrationScan)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ScalingScan(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(apx::scaling_scan(state.range(0), 21, 11, apx::default_gamma0(), 1));
}
BENCHMARK(BM_ScalingScan)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
