#include "berge/berge.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <limits>
#include <queue>

namespace berge {
namespace {

constexpr std::size_t kNoMatch = std::numeric_limits<std::size_t>::max();

struct DenseInstance {
  std::vector<std::uint64_t> right_ids;               // dense index -> original id
  std::vector<std::vector<std::size_t>> adjacency;    // left -> dense right indices
};

DenseInstance compress(const BipartiteInstance& instance) {
  DenseInstance dense;
  for (const auto& list : instance.adjacency) {
    dense.right_ids.insert(dense.right_ids.end(), list.begin(), list.end());
  }
  std::sort(dense.right_ids.begin(), dense.right_ids.end());
  dense.right_ids.erase(std::unique(dense.right_ids.begin(), dense.right_ids.end()),
                        dense.right_ids.end());
  dense.adjacency.reserve(instance.adjacency.size());
  for (const auto& list : instance.adjacency) {
    std::vector<std::size_t> row;
    row.reserve(list.size());
    for (std::uint64_t id : list) {
      row.push_back(static_cast<std::size_t>(
          std::lower_bound(dense.right_ids.begin(), dense.right_ids.end(), id) -
          dense.right_ids.begin()));
    }
    dense.adjacency.push_back(std::move(row));
  }
  return dense;
}

bool kuhn_augment(const DenseInstance& dense, std::size_t left, std::vector<char>& visited,
                  std::vector<std::size_t>& match_left, std::vector<std::size_t>& match_right) {
  for (std::size_t right : dense.adjacency[left]) {
    if (visited[right]) continue;
    visited[right] = 1;
    if (match_right[right] == kNoMatch ||
        kuhn_augment(dense, match_right[right], visited, match_left, match_right)) {
      match_left[left] = right;
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

// Hopcroft-Karp: repeated BFS layering plus layered DFS augmentation.
std::size_t hopcroft_karp(const DenseInstance& dense, std::vector<std::size_t>& match_left,
                          std::vector<std::size_t>& match_right, std::size_t matched) {
  const std::size_t lefts = dense.adjacency.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> layer(lefts);
  const std::function<bool(std::size_t)> dfs = [&](std::size_t left) {
    for (std::size_t right : dense.adjacency[left]) {
      const std::size_t next = match_right[right];
      if (next == kNoMatch || (layer[next] == layer[left] + 1 && dfs(next))) {
        match_left[left] = right;
        match_right[right] = left;
        return true;
      }
    }
    layer[left] = kInf;
    return false;
  };
  for (;;) {
    std::queue<std::size_t> frontier;
    for (std::size_t l = 0; l < lefts; ++l) {
      layer[l] = match_left[l] == kNoMatch ? 0 : kInf;
      if (layer[l] == 0) frontier.push(l);
    }
    bool reachable = false;
    while (!frontier.empty()) {
      const std::size_t left = frontier.front();
      frontier.pop();
      for (std::size_t right : dense.adjacency[left]) {
        const std::size_t next = match_right[right];
        if (next == kNoMatch) {
          reachable = true;
        } else if (layer[next] == kInf) {
          layer[next] = layer[left] + 1;
          frontier.push(next);
        }
      }
    }
    if (!reachable) return matched;
    for (std::size_t l = 0; l < lefts; ++l) {
      if (match_left[l] == kNoMatch && layer[l] == 0 && dfs(l)) ++matched;
    }
  }
}

}  // namespace

Matching max_matching(const BipartiteInstance& instance) {
  const DenseInstance dense = compress(instance);
  const std::size_t lefts = dense.adjacency.size();
  const std::size_t rights = dense.right_ids.size();
  std::vector<std::size_t> match_left(lefts, kNoMatch);
  std::vector<std::size_t> match_right(rights, kNoMatch);

  std::size_t matched = 0;
  for (std::size_t l = 0; l < lefts; ++l) {
    for (std::size_t right : dense.adjacency[l]) {
      if (match_right[right] == kNoMatch) {
        match_left[l] = right;
        match_right[right] = l;
        ++matched;
        break;
      }
    }
  }

  if (lefts > 64) {
    matched = hopcroft_karp(dense, match_left, match_right, matched);
  } else {
    std::vector<char> visited(rights);
    for (std::size_t l = 0; l < lefts; ++l) {
      if (match_left[l] != kNoMatch) continue;
      std::fill(visited.begin(), visited.end(), 0);
      if (kuhn_augment(dense, l, visited, match_left, match_right)) ++matched;
    }
  }

  Matching result;
  result.size = matched;
  result.pairing.resize(lefts);
  for (std::size_t l = 0; l < lefts; ++l) {
    if (match_left[l] != kNoMatch) result.pairing[l] = dense.right_ids[match_left[l]];
  }
  return result;
}

namespace {

// Core pairs in colex order of the underlying vertex pairs (the core is
// sorted, so (core[a], core[b]) ascends in pair rank as (b, a) ascends).
std::vector<std::pair<Vertex, Vertex>> core_pairs(std::span<const Vertex> core) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(core.size() * (core.size() - 1) / 2);
  for (std::size_t b = 1; b < core.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) pairs.emplace_back(core[a], core[b]);
  }
  return pairs;
}

std::optional<BergeWitness> witness_from_matching(const CompleteColoring& coloring,
                                                  std::span<const Vertex> core, int chi,
                                                  const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                  const Matching& matching) {
  if (matching.size != pairs.size()) return std::nullopt;
  BergeWitness witness;
  witness.core.assign(core.begin(), core.end());
  witness.color = chi;
  witness.assignment.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    witness.assignment.push_back(BergeWitness::PairAssignment{
        pairs[i].first, pairs[i].second,
        HyperEdge{colex_unrank(*matching.pairing[i], coloring.r())}});
  }
  return witness;
}

}  // namespace

std::optional<BergeWitness> mono_berge_clique_on(const CompleteColoring& coloring,
                                                 std::span<const Vertex> core, int chi) {
  if (core.size() < 2) throw OutOfRangeError("mono_berge_clique_on: core needs >= 2 vertices");
  colex_rank_in(core, coloring.N());  // validates sortedness and range
  if (chi < 0 || chi >= coloring.c()) {
    throw BadColorError("mono_berge_clique_on: color must be in [0, c)");
  }
  const auto pairs = core_pairs(core);
  BipartiteInstance instance;
  instance.adjacency.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    std::vector<std::uint64_t> candidates;
    for (const auto& edge : pair_star(coloring, u, v, chi)) {
      candidates.push_back(colex_rank(edge.vertices));
    }
    if (candidates.empty()) return std::nullopt;
    instance.adjacency.push_back(std::move(candidates));
  }
  return witness_from_matching(coloring, core, chi, pairs, max_matching(instance));
}

namespace {

// Hyperedge ranks per (pair rank, color), each list ascending.
struct PairBuckets {
  std::vector<std::vector<std::uint64_t>> lists;
  int c = 0;

  const std::vector<std::uint64_t>& at(std::uint64_t pair, int chi) const {
    return lists[pair * static_cast<std::uint64_t>(c) + chi];
  }
};

PairBuckets build_buckets(const CompleteColoring& coloring) {
  PairBuckets buckets;
  buckets.c = coloring.c();
  buckets.lists.resize(binomial_u64(coloring.N(), 2) * static_cast<std::uint64_t>(coloring.c()));
  if (coloring.r() < 2) return buckets;
  ColexSubsets edges(coloring.N(), coloring.r());
  auto it = edges.begin();
  const auto stop = edges.end();
  for (; it != stop; ++it) {
    const auto& verts = *it;
    const int chi = coloring.color_at(it.rank());
    for (std::size_t b = 1; b < verts.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        buckets.lists[pair_rank(verts[a], verts[b]) * buckets.c + chi].push_back(it.rank());
      }
    }
  }
  return buckets;
}

std::optional<BergeWitness> scan_cores(const CompleteColoring& coloring, int n,
                                       const PairBuckets& buckets,
                                       const std::vector<std::uint64_t>& class_sizes, int chi,
                                       std::uint64_t first, std::uint64_t last) {
  const std::uint64_t needed = binomial_u64(n, 2);
  if (class_sizes[chi] < needed) return std::nullopt;
  ColexSubsets cores(coloring.N(), n, first, last);
  for (auto it = cores.begin(); it != cores.end(); ++it) {
    const auto& core = *it;
    const auto pairs = core_pairs(core);
    BipartiteInstance instance;
    instance.adjacency.reserve(pairs.size());
    bool feasible = true;
    for (const auto& [u, v] : pairs) {
      const auto& bucket = buckets.at(pair_rank(u, v), chi);
      if (bucket.empty()) {
        feasible = false;
        break;
      }
      instance.adjacency.push_back(bucket);
    }
    if (!feasible) continue;
    auto witness = witness_from_matching(coloring, core, chi, pairs, max_matching(instance));
    if (witness) return witness;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BergeWitness> find_mono_berge_clique(const CompleteColoring& coloring, int n,
                                                   int workers) {
  if (n < 2) throw OutOfRangeError("find_mono_berge_clique: n must be >= 2");
  if (workers < 1) throw OutOfRangeError("find_mono_berge_clique: workers must be >= 1");
  if (n > coloring.N()) return std::nullopt;
  if (binomial_u64(coloring.N(), 2) * static_cast<std::uint64_t>(coloring.c()) > kMaxDenseTable) {
    throw TooLargeError("find_mono_berge_clique: too many (pair, color) buckets");
  }
  const PairBuckets buckets = build_buckets(coloring);
  std::vector<std::uint64_t> class_sizes(coloring.c(), 0);
  for (int color : coloring.colors()) ++class_sizes[color];

  const std::uint64_t cores_per_color = binomial_u64(coloring.N(), n);
  const std::uint64_t total = cores_per_color * static_cast<std::uint64_t>(coloring.c());
  const int lanes = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), std::max<std::uint64_t>(total, 1)));

  // Scans the global index window [first, last); index = chi * cores_per_color
  // + core rank, so the least hit is the least (chi, core rank).
  const auto scan_window = [&](std::uint64_t first,
                               std::uint64_t last) -> std::optional<std::pair<std::uint64_t, BergeWitness>> {
    std::uint64_t pos = first;
    while (pos < last) {
      const int chi = static_cast<int>(pos / cores_per_color);
      const std::uint64_t core_first = pos % cores_per_color;
      const std::uint64_t core_last = std::min(cores_per_color, core_first + (last - pos));
      auto witness = scan_cores(coloring, n, buckets, class_sizes, chi, core_first, core_last);
      if (witness) {
        const std::uint64_t hit =
            static_cast<std::uint64_t>(chi) * cores_per_color + colex_rank(witness->core);
        return std::make_pair(hit, std::move(*witness));
      }
      pos += core_last - core_first;
    }
    return std::nullopt;
  };

  if (lanes <= 1) {
    auto hit = scan_window(0, total);
    if (hit) return std::move(hit->second);
    return std::nullopt;
  }

  std::vector<std::future<std::optional<std::pair<std::uint64_t, BergeWitness>>>> futures;
  futures.reserve(lanes);
  const std::uint64_t chunk = (total + lanes - 1) / lanes;
  for (int lane = 0; lane < lanes; ++lane) {
    const std::uint64_t first = std::min(total, chunk * static_cast<std::uint64_t>(lane));
    const std::uint64_t last = std::min(total, first + chunk);
    futures.push_back(std::async(std::launch::async, scan_window, first, last));
  }
  std::optional<std::pair<std::uint64_t, BergeWitness>> best;
  for (auto& f : futures) {
    auto hit = f.get();
    if (hit && (!best || hit->first < best->first)) best = std::move(hit);
  }
  if (best) return std::move(best->second);
  return std::nullopt;
}

std::optional<BergeEmbedding> berge_embeds(const Hypergraph& host, const SimpleGraph& pattern,
                                           std::uint64_t budget) {
  if (host.vertex_count < 0 || host.vertex_count > kMaxVertices) {
    throw TooLargeError("berge_embeds: host must have at most 64 vertices");
  }
  if (pattern.vertex_count > host.vertex_count) return std::nullopt;
  if (pattern.edges.size() > host.edges.size()) return std::nullopt;
  for (const auto& [u, v] : pattern.edges) {
    if (u < 0 || u >= v || v >= pattern.vertex_count) {
      throw OutOfRangeError("berge_embeds: pattern edge must satisfy 0 <= u < v < vertex_count");
    }
  }

  // Host edge indices containing each host vertex pair.
  const std::uint64_t host_pairs = binomial_u64(host.vertex_count, 2);
  std::vector<std::vector<std::size_t>> pair_edges(host_pairs);
  for (std::size_t e = 0; e < host.edges.size(); ++e) {
    const auto& verts = host.edges[e].vertices;
    for (std::size_t b = 1; b < verts.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        pair_edges[pair_rank(verts[a], verts[b])].push_back(e);
      }
    }
  }

  // Pattern edges incident to each pattern vertex whose other end is earlier.
  std::vector<std::vector<std::size_t>> settled_at(pattern.vertex_count);
  for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
    settled_at[std::max(pattern.edges[i].first, pattern.edges[i].second)].push_back(i);
  }

  std::vector<Vertex> image(pattern.vertex_count, -1);
  std::uint64_t used = 0;
  std::uint64_t expansions = 0;

  std::optional<BergeEmbedding> found;
  const std::function<bool(int)> extend = [&](int next) {
    if (next == pattern.vertex_count) {
      BipartiteInstance instance;
      instance.adjacency.reserve(pattern.edges.size());
      for (const auto& [u, v] : pattern.edges) {
        Vertex a = image[u];
        Vertex b = image[v];
        if (a > b) std::swap(a, b);
        std::vector<std::uint64_t> ids;
        for (std::size_t e : pair_edges[pair_rank(a, b)]) ids.push_back(e);
        instance.adjacency.push_back(std::move(ids));
      }
      const Matching matching = max_matching(instance);
      if (matching.size != pattern.edges.size()) return false;
      BergeEmbedding embedding;
      embedding.vertex_map = image;
      embedding.edge_map.reserve(pattern.edges.size());
      for (const auto& match : matching.pairing) {
        embedding.edge_map.push_back(static_cast<std::size_t>(*match));
      }
      found = std::move(embedding);
      return true;
    }
    for (Vertex candidate = 0; candidate < host.vertex_count; ++candidate) {
      if (used & (std::uint64_t{1} << candidate)) continue;
      image[next] = candidate;
      bool viable = true;
      for (std::size_t i : settled_at[next]) {
        Vertex a = image[pattern.edges[i].first];
        Vertex b = image[pattern.edges[i].second];
        if (a > b) std::swap(a, b);
        if (pair_edges[pair_rank(a, b)].empty()) {
          viable = false;
          break;
        }
      }
      if (viable) {
        if (++expansions > budget) throw TooLargeError("berge_embeds: partial-map budget exceeded");
        used |= std::uint64_t{1} << candidate;
        if (extend(next + 1)) return true;
        used &= ~(std::uint64_t{1} << candidate);
      }
    }
    image[next] = -1;
    return false;
  };

  extend(0);
  return found;
}

}  // namespace berge
