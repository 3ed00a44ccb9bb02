#pragma once

#include <optional>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// The 3-uniform hedgehog with body [0, n): one hyperedge per body pair,
// consisting of the pair plus its own spine vertex n + pair_rank.  Edges are
// listed in colex pair order, so edge j is the unique hyperedge containing
// the pair of rank j.
struct Hedgehog {
  int body = 0;
  Hypergraph hypergraph;
};

// Throws TooLargeError when n + C(n, 2) would exceed 64 vertices.
Hedgehog build_hedgehog(int n);

// A hedgehog is a Berge copy of K_body by design: the identity on the body
// together with pair -> its private hyperedge.  Returns that canonical
// embedding after cross-checking it against the generic berge_embeds search.
std::optional<BergeEmbedding> is_berge_clique(const Hedgehog& hedgehog);

}  // namespace berge
