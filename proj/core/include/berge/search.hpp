#pragma once

#include <cstdint>
#include <optional>

#include "berge/hypergraph.hpp"

namespace berge {

// Nominal leaf count c^C(N, r) above which a search is refused outright.
inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 48;

struct SearchOptions {
  std::uint64_t max_nominal_leaves = kDefaultSearchBudget;
  // Fixes the color of the first edge to 0 (sound by color symmetry).
  bool fix_first_edge_color = true;
  // Rejects colorings that a vertex relabeling would make lexicographically
  // smaller; only available while N! <= 40320 (N <= 8).
  bool vertex_canonization = false;
};

struct SearchOutcome {
  bool arrows = false;
  // A monochromatic-Berge-clique-free coloring when arrows is false.
  std::optional<CompleteColoring> counterexample;
  // Color assignments tried over the whole tree.
  std::uint64_t explored = 0;
};

// Does every c-coloring of K_N^r contain a monochromatic Berge clique on n
// vertices?  Exhaustive depth-first search over colorings in colex edge
// order, pruning a branch as soon as the freshly colored edge completes a
// witness (witnesses are monotone under extension, so pruning is sound).
// Hosts with N < r have no edges; the empty coloring is then a
// counterexample and the answer is false.  Throws BudgetExceededError when
// c^C(N, r) exceeds the nominal leaf budget.
SearchOutcome ramsey_decide(int r, int c, int n, int N, const SearchOptions& options = {});

struct RamseyScan {
  // Least N in [n, N_max] where arrowing holds, if any.
  std::optional<int> value;
  int searched_max = 0;
  std::uint64_t explored = 0;
};

// Scans N = n, n + 1, ..., N_max with ramsey_decide.  By edge-monotonicity
// the first arrowing N is the Berge-Ramsey number when it exists.
RamseyScan ramsey_number_exact(int r, int c, int n, int N_max,
                               const SearchOptions& options = {});

}  // namespace berge
