#include <benchmark/benchmark.h>

#include "berge/search.hpp"

namespace {

// Arrowing decision at the critical host size.
void BM_RamseyDecide(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::ramsey_decide(3, 2, 3, 5).arrows);
  }
}
BENCHMARK(BM_RamseyDecide);

// Full scan that pins R_3(Berge-K_3; 2) = 5.
void BM_RamseyScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::ramsey_number_exact(3, 2, 3, 6).value.has_value());
  }
}
BENCHMARK(BM_RamseyScan);

// The 5-uniform searches behind the closed-form comparison.
void BM_RamseyScanRank5(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(berge::ramsey_number_exact(5, 2, n, 7).value.has_value());
  }
}
BENCHMARK(BM_RamseyScanRank5)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
