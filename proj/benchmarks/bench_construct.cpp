#include <benchmark/benchmark.h>

#include "berge/berge.hpp"
#include "berge/construct.hpp"

namespace {

void BM_RandomForbidden(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::random_forbidden(N, 4, seed++).colors().size());
  }
}
BENCHMARK(BM_RandomForbidden)->Arg(12)->Arg(32)->Arg(64);

void BM_RespectingColoring(benchmark::State& state) {
  const auto table = berge::random_forbidden(static_cast<int>(state.range(0)), 4, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::respecting_coloring(table, 3).edge_count());
  }
}
BENCHMARK(BM_RespectingColoring)->Arg(12)->Arg(20);

// The flagship certified instance: exact big-rational potential over
// C(12, 2) = 66 pairs and C(12, 8) = 495 cores.
void BM_Derandomize(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::derandomize_forbidden(12, 8, 4).compatible);
  }
}
BENCHMARK(BM_Derandomize)->Unit(benchmark::kMillisecond);

void BM_FindMonoBergeClique(benchmark::State& state) {
  const auto certificate = berge::derandomize_forbidden(12, 8, 4);
  const auto coloring = berge::respecting_coloring(certificate.forbidden, 3);
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::find_mono_berge_clique(coloring, 8, workers).has_value());
  }
}
BENCHMARK(BM_FindMonoBergeClique)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
