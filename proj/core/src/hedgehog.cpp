#include "berge/hedgehog.hpp"

namespace berge {

Hedgehog build_hedgehog(int n) {
  if (n < 2) throw OutOfRangeError("build_hedgehog: n must be >= 2");
  const std::uint64_t pairs = binomial_u64(n, 2);
  if (static_cast<std::uint64_t>(n) + pairs > kMaxVertices) {
    throw TooLargeError("build_hedgehog: body plus spine exceeds 64 vertices");
  }
  Hedgehog hedgehog;
  hedgehog.body = n;
  hedgehog.hypergraph.vertex_count = n + static_cast<int>(pairs);
  hedgehog.hypergraph.uniform_rank = 3;
  hedgehog.hypergraph.edges.reserve(pairs);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const Vertex spine = n + static_cast<Vertex>(pair_rank(u, v));
      hedgehog.hypergraph.edges.push_back(HyperEdge{{u, v, spine}});
    }
  }
  return hedgehog;
}

std::optional<BergeEmbedding> is_berge_clique(const Hedgehog& hedgehog) {
  const int n = hedgehog.body;
  const SimpleGraph pattern = complete_graph(n);

  BergeEmbedding canonical;
  canonical.vertex_map.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) canonical.vertex_map[static_cast<std::size_t>(v)] = v;
  canonical.edge_map.reserve(pattern.edges.size());
  for (const auto& [u, v] : pattern.edges) {
    // Edge j of the hypergraph is the unique edge containing pair rank j.
    const std::size_t j = static_cast<std::size_t>(pair_rank(u, v));
    if (j >= hedgehog.hypergraph.edges.size() ||
        !hedgehog.hypergraph.edges[j].contains_pair(u, v)) {
      return std::nullopt;
    }
    canonical.edge_map.push_back(j);
  }

  const auto searched = berge_embeds(hedgehog.hypergraph, pattern);
  if (!searched || searched->vertex_map != canonical.vertex_map ||
      searched->edge_map != canonical.edge_map) {
    return std::nullopt;
  }
  return canonical;
}

}  // namespace berge
