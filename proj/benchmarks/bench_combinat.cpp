#include <benchmark/benchmark.h>

#include "berge/combinat.hpp"

namespace {

void BM_ColexRank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::vector<berge::Vertex> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = 2 * i + 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::colex_rank(subset));
  }
}
BENCHMARK(BM_ColexRank)->Arg(4)->Arg(8)->Arg(16);

void BM_ColexUnrank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::uint64_t rank = berge::binomial_u64(2 * k, k) - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::colex_unrank(rank, k));
  }
}
BENCHMARK(BM_ColexUnrank)->Arg(4)->Arg(8)->Arg(16);

// Full enumeration throughput: every 10-subset of [0, 20).
void BM_ColexStream(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t checksum = 0;
    for (const auto& subset : berge::ColexSubsets(20, 10)) {
      checksum += static_cast<std::uint64_t>(subset.back());
    }
    benchmark::DoNotOptimize(checksum);
  }
}
BENCHMARK(BM_ColexStream);

}  // namespace
