#include "berge/search.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "berge/berge.hpp"

namespace berge {
namespace {

// Rejects partial colorings that some vertex relabeling makes strictly
// smaller in colex-edge lex order.  Sound alongside the first-edge color fix:
// the overall lex-least coloring of a combined (relabel, recolor) orbit both
// starts with color 0 and is vertex-minimal, so each orbit keeps a survivor.
struct Canonizer {
  std::vector<std::vector<std::uint64_t>> edge_maps;  // per permutation: j -> rank(pi(edge_j))

  bool rejects(const std::vector<int>& colors, std::int64_t assigned_through) const {
    for (const auto& map : edge_maps) {
      for (std::int64_t t = 0; t <= assigned_through; ++t) {
        const std::uint64_t source = map[static_cast<std::size_t>(t)];
        if (source > static_cast<std::uint64_t>(assigned_through)) break;
        const int relabeled = colors[static_cast<std::size_t>(source)];
        const int original = colors[static_cast<std::size_t>(t)];
        if (relabeled != original) {
          if (relabeled < original) return true;
          break;
        }
      }
    }
    return false;
  }
};

Canonizer build_canonizer(int N, int r, const std::vector<std::vector<Vertex>>& edges) {
  Canonizer canonizer;
  std::vector<Vertex> perm(static_cast<std::size_t>(N));
  for (int v = 0; v < N; ++v) perm[static_cast<std::size_t>(v)] = v;
  std::vector<Vertex> mapped(static_cast<std::size_t>(r));
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint64_t> map(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      for (std::size_t i = 0; i < mapped.size(); ++i) {
        mapped[i] = perm[static_cast<std::size_t>(edges[j][i])];
      }
      std::sort(mapped.begin(), mapped.end());
      map[j] = colex_rank(mapped);
    }
    canonizer.edge_maps.push_back(std::move(map));
  }
  return canonizer;
}

}  // namespace

SearchOutcome ramsey_decide(int r, int c, int n, int N, const SearchOptions& options) {
  if (r < 2) throw OutOfRangeError("ramsey_decide: r must be >= 2");
  if (c < 1) throw OutOfRangeError("ramsey_decide: c must be >= 1");
  if (n < 2) throw OutOfRangeError("ramsey_decide: n must be >= 2");
  if (N < 0 || N > kMaxVertices) throw OutOfRangeError("ramsey_decide: N must be in [0, 64]");

  const std::uint64_t edge_total = binomial_u64(N, r);
  if (edge_total > kMaxDenseTable) {
    throw BudgetExceededError("ramsey_decide: edge table exceeds supported size");
  }
  if (c >= 2) {
    // Nominal leaves c^C(N, r) against the budget, computed without overflow.
    if (edge_total > 63) {
      throw BudgetExceededError("ramsey_decide: nominal leaf count exceeds budget");
    }
    using boost::multiprecision::pow;
    if (pow(BigInt(c), static_cast<unsigned>(edge_total)) > BigInt(options.max_nominal_leaves)) {
      throw BudgetExceededError("ramsey_decide: nominal leaf count exceeds budget");
    }
  }

  const std::int64_t M = static_cast<std::int64_t>(edge_total);
  std::vector<std::vector<Vertex>> edges;
  std::vector<std::uint64_t> edge_masks;
  std::vector<std::vector<std::uint64_t>> edge_pairs;
  edges.reserve(edge_total);
  edge_masks.reserve(edge_total);
  edge_pairs.reserve(edge_total);
  for (const auto& verts : ColexSubsets(N, r)) {
    edges.push_back(verts);
    edge_masks.push_back(HyperEdge{verts}.mask());
    std::vector<std::uint64_t> pair_ranks;
    pair_ranks.reserve(static_cast<std::size_t>(r) * (r - 1) / 2);
    for (std::size_t b = 1; b < verts.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) pair_ranks.push_back(pair_rank(verts[a], verts[b]));
    }
    edge_pairs.push_back(std::move(pair_ranks));
  }

  Canonizer canonizer;
  if (options.vertex_canonization) {
    if (N > 8) {
      throw TooLargeError("ramsey_decide: vertex canonization limited to N <= 8");
    }
    canonizer = build_canonizer(N, r, edges);
  }

  const std::uint64_t needed = binomial_u64(n, 2);
  if (binomial_u64(N, n) > kMaxDenseTable) {
    throw TooLargeError("ramsey_decide: too many candidate cores to check");
  }
  // Candidate cores with their vertex masks and pair ranks, fixed up front.
  std::vector<std::uint64_t> core_masks;
  std::vector<std::uint64_t> core_pairs;  // flattened, C(n, 2) ranks per core
  if (n <= N) {
    core_masks.reserve(binomial_u64(N, n));
    for (const auto& core : ColexSubsets(N, n)) {
      std::uint64_t mask = 0;
      for (Vertex v : core) mask |= std::uint64_t{1} << v;
      core_masks.push_back(mask);
      for (std::size_t b = 1; b < core.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a) core_pairs.push_back(pair_rank(core[a], core[b]));
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> buckets(binomial_u64(N, 2) *
                                                  static_cast<std::uint64_t>(c));
  std::vector<std::uint64_t> class_sizes(static_cast<std::size_t>(c), 0);
  std::vector<int> colors(edge_total, -1);
  std::vector<int> next_try(edge_total, 0);
  std::uint64_t explored = 0;

  const auto assign = [&](std::int64_t e, int chi) {
    colors[static_cast<std::size_t>(e)] = chi;
    for (std::uint64_t p : edge_pairs[static_cast<std::size_t>(e)]) {
      buckets[p * static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(chi)].push_back(
          static_cast<std::uint64_t>(e));
    }
    ++class_sizes[static_cast<std::size_t>(chi)];
  };
  const auto unassign = [&](std::int64_t e) {
    const int chi = colors[static_cast<std::size_t>(e)];
    for (std::uint64_t p : edge_pairs[static_cast<std::size_t>(e)]) {
      buckets[p * static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(chi)].pop_back();
    }
    --class_sizes[static_cast<std::size_t>(chi)];
    colors[static_cast<std::size_t>(e)] = -1;
  };

  // A witness appearing after edge e was colored chi must assign e to one of
  // its own pairs, so its core meets e in >= 2 vertices; only those cores
  // need rechecking.
  const auto creates_witness = [&](std::int64_t e, int chi) {
    if (n > N || class_sizes[static_cast<std::size_t>(chi)] < needed) return false;
    const std::uint64_t e_mask = edge_masks[static_cast<std::size_t>(e)];
    for (std::size_t s = 0; s < core_masks.size(); ++s) {
      if (std::popcount(core_masks[s] & e_mask) < 2) continue;
      const std::uint64_t* pair_ranks = core_pairs.data() + s * needed;
      bool feasible = true;
      std::uint64_t candidates = 0;
      for (std::uint64_t i = 0; i < needed; ++i) {
        const auto& bucket = buckets[pair_ranks[i] * static_cast<std::uint64_t>(c) +
                                     static_cast<std::uint64_t>(chi)];
        if (bucket.empty()) {
          feasible = false;
          break;
        }
        candidates += bucket.size();
      }
      if (!feasible || candidates < needed) continue;
      BipartiteInstance instance;
      instance.adjacency.reserve(needed);
      for (std::uint64_t i = 0; i < needed; ++i) {
        instance.adjacency.push_back(buckets[pair_ranks[i] * static_cast<std::uint64_t>(c) +
                                             static_cast<std::uint64_t>(chi)]);
      }
      if (max_matching(instance).size == needed) return true;
    }
    return false;
  };

  std::int64_t depth = 0;
  for (;;) {
    if (depth == M) {
      SearchOutcome outcome;
      outcome.arrows = false;
      outcome.counterexample = CompleteColoring(N, r, c, colors);
      outcome.explored = explored;
      return outcome;
    }
    const int limit =
        (depth == 0 && options.fix_first_edge_color && c >= 2) ? 1 : c;
    if (next_try[static_cast<std::size_t>(depth)] >= limit) {
      next_try[static_cast<std::size_t>(depth)] = 0;
      if (depth == 0) {
        SearchOutcome outcome;
        outcome.arrows = true;
        outcome.explored = explored;
        return outcome;
      }
      --depth;
      unassign(depth);
      continue;
    }
    const int chi = next_try[static_cast<std::size_t>(depth)]++;
    ++explored;
    assign(depth, chi);
    if (!creates_witness(depth, chi) &&
        !(options.vertex_canonization && canonizer.rejects(colors, depth))) {
      ++depth;
    } else {
      unassign(depth);
    }
  }
}

RamseyScan ramsey_number_exact(int r, int c, int n, int N_max, const SearchOptions& options) {
  if (n < 2) throw OutOfRangeError("ramsey_number_exact: n must be >= 2");
  if (N_max < n) throw OutOfRangeError("ramsey_number_exact: N_max must be >= n");
  RamseyScan scan;
  for (int N = n; N <= N_max; ++N) {
    scan.searched_max = N;
    const SearchOutcome outcome = ramsey_decide(r, c, n, N, options);
    scan.explored += outcome.explored;
    if (outcome.arrows) {
      scan.value = N;
      return scan;
    }
  }
  return scan;
}

}  // namespace berge
