#include <benchmark/benchmark.h>

#include "ewb/eulerian.hpp"
#include "ewb/hopping.hpp"
#include "ewb/perm.hpp"

namespace {

void BM_StreamSn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ewb::PermutationStream stream(n);
    std::uint64_t descents = 0;
    while (stream.next()) descents += static_cast<std::uint64_t>(ewb::descent_count(stream.current()));
    benchmark::DoNotOptimize(descents);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ewb::factorial_u64(n)));
}
BENCHMARK(BM_StreamSn)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_LexUnrank(benchmark::State& state) {
  std::uint64_t rank = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ewb::lex_unrank(20, rank));
    rank = (rank + 1'000'003) % ewb::factorial_u64(20);
  }
}
BENCHMARK(BM_LexUnrank);

void BM_BruteForceHistogram(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shards = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ewb::table_brute_force(n, {shards, false}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ewb::factorial_u64(n)));
}
BENCHMARK(BM_BruteForceHistogram)->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_OrbitCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ewb::orbit_census(n));
}
BENCHMARK(BM_OrbitCensus)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

}  // namespace
