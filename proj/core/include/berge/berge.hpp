#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// Left side: the pairs (or pattern edges) to be saturated, in a fixed order.
// Right side: candidate hyperedge ids; ids may be arbitrary uint64 values
// (colex ranks are used throughout) and each adjacency list is ascending.
struct BipartiteInstance {
  std::vector<std::vector<std::uint64_t>> adjacency;
};

struct Matching {
  std::size_t size = 0;
  // For each left node, the matched right id, or nullopt if exposed.
  std::vector<std::optional<std::uint64_t>> pairing;
};

// Maximum bipartite matching: greedy initialization followed by augmenting
// paths (Hopcroft-Karp layering once the left side exceeds 64 nodes).
// Deterministic: candidates are explored in ascending id order.
Matching max_matching(const BipartiteInstance& instance);

// Does the chi-colored class contain a Berge copy of the complete graph on
// `core`?  Each core pair needs its own distinct hyperedge of color chi
// containing it; existence is decided by maximum matching between the C(n, 2)
// core pairs and the candidate hyperedges.
std::optional<BergeWitness> mono_berge_clique_on(const CompleteColoring& coloring,
                                                 std::span<const Vertex> core, int chi);

// Scans all colors and all n-subsets of [0, N) for a monochromatic Berge
// clique, returning the witness with the lexicographically least (chi, core
// rank), or nullopt.  `workers` > 1 partitions the scan; the result is
// independent of the partitioning.
std::optional<BergeWitness> find_mono_berge_clique(const CompleteColoring& coloring, int n,
                                                   int workers = 1);

struct BergeEmbedding {
  std::vector<Vertex> vertex_map;        // pattern vertex -> host vertex
  std::vector<std::size_t> edge_map;     // pattern edge index -> host edge index
};

inline constexpr std::uint64_t kDefaultEmbedBudget = 10'000'000;

// Does `host` contain a Berge copy of the simple graph `pattern`?  Searches
// injective vertex maps depth-first (pruning images whose mapped pattern
// edges have no containing host edge), then assigns distinct host edges by
// maximum matching.  Throws TooLargeError after `budget` partial vertex maps.
std::optional<BergeEmbedding> berge_embeds(const Hypergraph& host, const SimpleGraph& pattern,
                                           std::uint64_t budget = kDefaultEmbedBudget);

}  // namespace berge
