#include <benchmark/benchmark.h>

#include <random>

#include "berge/berge.hpp"

namespace {

berge::BipartiteInstance random_instance(int lefts, int rights, int degree,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  berge::BipartiteInstance instance;
  instance.adjacency.resize(lefts);
  for (auto& row : instance.adjacency) {
    for (int d = 0; d < degree; ++d) {
      row.push_back(rng() % static_cast<std::uint64_t>(rights));
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return instance;
}

// Below the 64-left threshold: augmenting-path search.
void BM_MatchingAugmenting(benchmark::State& state) {
  const auto instance = random_instance(60, 60, 6, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::max_matching(instance).size);
  }
}
BENCHMARK(BM_MatchingAugmenting);

// Above the threshold: layered (Hopcroft-Karp) search.
void BM_MatchingLayered(benchmark::State& state) {
  const auto instance = random_instance(static_cast<int>(state.range(0)),
                                        static_cast<int>(state.range(0)), 8, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::max_matching(instance).size);
  }
}
BENCHMARK(BM_MatchingLayered)->Arg(128)->Arg(512)->Arg(2048);

}  // namespace
