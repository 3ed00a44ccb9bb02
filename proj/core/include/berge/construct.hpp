#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// How respecting_coloring picks among the allowed colors of a hyperedge.
struct LeastAllowed {};
struct RandomAllowed {
  std::uint64_t seed = 0;
};
struct FixedPreference {
  std::vector<int> order;  // a permutation of [0, c); earlier entries win
};
using ColoringPolicy = std::variant<LeastAllowed, RandomAllowed, FixedPreference>;

// A forbidden table with one uniformly random color per pair.  Words are
// drawn from a counter-based generator keyed by (seed, pair rank), so the
// table is reproducible regardless of generation order.
ForbiddenTable random_forbidden(int N, int c, std::uint64_t seed);

// Colors every r-subset with a color differing from the forbidden color of
// each of its vertex pairs.  Throws NoAllowedColorError (carrying the edge
// rank) when some edge has every color forbidden.
CompleteColoring respecting_coloring(const ForbiddenTable& forbidden, int r,
                                     const ColoringPolicy& policy = LeastAllowed{});

// Number of (core, color) pairs compatible with the table: chi counts for S
// when no pair of S has forbidden color chi.  Any rule-respecting coloring
// can only realize a monochromatic Berge clique on such a pair.
std::uint64_t compatible_count(const ForbiddenTable& forbidden, int n);

// A forbidden table together with the potential-function accounting that
// produced it.
struct Certificate {
  ForbiddenTable forbidden;
  int n = 0;
  std::uint64_t compatible = 0;    // compatible_count(forbidden, n)
  BigRational initial_expectation; // potential before any pair was fixed
};

// Method of conditional expectations: fixes pair colors one at a time
// (colex order), each time choosing the color minimizing the conditional
// expected number of compatible (core, color) pairs.  The potential never
// increases; when the initial expectation is < 1 the result has
// compatible == 0.  Exact big-rational arithmetic throughout.  `trace`, when
// given, receives the potential after 0, 1, 2, ... fixed pairs.
Certificate derandomize_forbidden(int N, int n, int c,
                                  std::vector<BigRational>* trace = nullptr);

struct MonoEstimate {
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;        // trials whose coloring had a mono Berge clique
  std::uint64_t infeasible = 0;  // trials aborted by NoAllowedColorError
  double fraction = 0.0;
  double wilson_low = 0.0;       // 95% Wilson score interval for the hit rate
  double wilson_high = 0.0;
};

// Monte Carlo estimate of the probability that the construction fails: draws
// `trials` independent forbidden tables (sub-seeded from `seed` by trial
// index), colors K_N^r, and scans for a monochromatic Berge clique on n
// vertices.  Deterministic for fixed arguments; `workers` partitions the
// trial range without changing the result.
MonoEstimate estimate_mono_probability(int N, int n, int r, int c, std::uint64_t trials,
                                       std::uint64_t seed,
                                       const ColoringPolicy& policy = LeastAllowed{},
                                       int workers = 1);

}  // namespace berge
