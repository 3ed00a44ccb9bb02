#include "berge/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace berge {

std::uint64_t HyperEdge::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : vertices) m |= std::uint64_t{1} << v;
  return m;
}

bool HyperEdge::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool HyperEdge::contains_pair(Vertex u, Vertex v) const {
  return contains(u) && contains(v);
}

std::string to_string(const HyperEdge& edge) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < edge.vertices.size(); ++i) {
    if (i > 0) out << ',';
    out << edge.vertices[i];
  }
  out << '}';
  return out.str();
}

SimpleGraph complete_graph(int n) {
  if (n < 0 || n > kMaxVertices) throw OutOfRangeError("complete_graph: n must be in [0, 64]");
  SimpleGraph g;
  g.vertex_count = n;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) g.edges.emplace_back(u, v);
  }
  return g;
}

Hypergraph complete_uniform(int N, int r) {
  if (N < 0 || N > kMaxVertices) throw OutOfRangeError("complete_uniform: N must be in [0, 64]");
  if (r < 1) throw OutOfRangeError("complete_uniform: r must be >= 1");
  if (binomial_u64(N, r) > kMaxDenseTable) {
    throw TooLargeError("complete_uniform: too many edges to materialize");
  }
  Hypergraph h;
  h.vertex_count = N;
  h.uniform_rank = r;
  h.edges.reserve(binomial_u64(N, r));
  for (const auto& subset : ColexSubsets(N, r)) h.edges.push_back(HyperEdge{subset});
  return h;
}

ForbiddenTable::ForbiddenTable(int N, int c)
    // Size 0 for out-of-range N keeps the range guard in the delegate ctor
    // as the single authority instead of tripping binomial_u64's own check.
    : ForbiddenTable(
          N, c,
          std::vector<int>(N >= 2 && N <= kMaxVertices ? binomial_u64(N, 2) : 0, 0)) {}

ForbiddenTable::ForbiddenTable(int N, int c, std::vector<int> colors)
    : N_(N), c_(c), colors_(std::move(colors)) {
  if (N_ < 0 || N_ > kMaxVertices) throw TooLargeError("ForbiddenTable: N must be in [0, 64]");
  if (c_ < 1) throw OutOfRangeError("ForbiddenTable: c must be >= 1");
}

int ForbiddenTable::color_at(std::uint64_t rank) const {
  if (rank >= colors_.size()) throw OutOfRangeError("ForbiddenTable: pair rank out of range");
  return colors_[rank];
}

int ForbiddenTable::color_of(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return color_at(pair_rank(u, v));
}

CompleteColoring::CompleteColoring(int N, int r, int c, std::vector<int> colors)
    : N_(N), r_(r), c_(c), colors_(std::move(colors)) {
  if (N_ < 0 || N_ > kMaxVertices) throw TooLargeError("CompleteColoring: N must be in [0, 64]");
  if (r_ < 1) throw OutOfRangeError("CompleteColoring: r must be >= 1");
  if (c_ < 1) throw OutOfRangeError("CompleteColoring: c must be >= 1");
  if (binomial_u64(N_, r_) > kMaxDenseTable) {
    throw TooLargeError("CompleteColoring: table exceeds supported size");
  }
}

CompleteColoring CompleteColoring::constant(int N, int r, int c, int color) {
  if (color < 0 || color >= c) throw BadColorError("CompleteColoring: color must be in [0, c)");
  if (N < 0 || N > kMaxVertices) throw TooLargeError("CompleteColoring: N must be in [0, 64]");
  if (r < 1) throw OutOfRangeError("CompleteColoring: r must be >= 1");
  return CompleteColoring(N, r, c, std::vector<int>(binomial_u64(N, r), color));
}

int CompleteColoring::color_at(std::uint64_t rank) const {
  if (rank >= colors_.size()) throw OutOfRangeError("CompleteColoring: edge rank out of range");
  return colors_[rank];
}

int CompleteColoring::color_of(std::span<const Vertex> edge) const {
  if (static_cast<int>(edge.size()) != r_) {
    throw OutOfRangeError("CompleteColoring: edge has wrong size");
  }
  return color_at(colex_rank_in(edge, N_).value);
}

std::vector<HyperEdge> pair_star(const CompleteColoring& coloring, Vertex u, Vertex v, int chi) {
  if (chi < 0 || chi >= coloring.c()) throw BadColorError("pair_star: color must be in [0, c)");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= coloring.N() || u == v) {
    throw OutOfRangeError("pair_star: pair must be two distinct vertices of [0, N)");
  }
  std::vector<HyperEdge> star;
  const int r = coloring.r();
  if (r < 2) return star;
  ColexSubsets all(coloring.N(), r);
  auto it = all.begin();
  const auto stop = all.end();
  for (; it != stop; ++it) {
    const auto& edge = *it;
    if (coloring.color_at(it.rank()) != chi) continue;
    if (std::binary_search(edge.begin(), edge.end(), u) &&
        std::binary_search(edge.begin(), edge.end(), v)) {
      star.push_back(HyperEdge{edge});
    }
  }
  return star;
}

ValidationReport ValidationReport::bad(std::string violation, std::optional<std::uint64_t> index,
                                       std::string detail) {
  return ValidationReport{false, std::move(violation), index, std::move(detail)};
}

ValidationReport validate(const Hypergraph& h) {
  if (h.vertex_count < 0 || h.vertex_count > kMaxVertices) {
    return ValidationReport::bad("vertex-count", std::nullopt, "vertex_count must be in [0, 64]");
  }
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& verts = h.edges[i].vertices;
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (verts[j] < 0 || verts[j] >= h.vertex_count) {
        return ValidationReport::bad("vertex-range", i, "vertex outside [0, vertex_count)");
      }
      if (j > 0 && verts[j] <= verts[j - 1]) {
        return ValidationReport::bad("not-sorted", i, "edge vertices not strictly increasing");
      }
    }
    if (h.uniform_rank && static_cast<int>(verts.size()) != *h.uniform_rank) {
      return ValidationReport::bad("uniformity", i, "edge size disagrees with uniform rank");
    }
  }
  std::vector<std::vector<Vertex>> sorted;
  sorted.reserve(h.edges.size());
  for (const auto& e : h.edges) sorted.push_back(e.vertices);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      return ValidationReport::bad("duplicate", std::nullopt, "hypergraph has a repeated edge");
    }
  }
  return ValidationReport::good();
}

ValidationReport validate(const ForbiddenTable& table) {
  const std::uint64_t expected = table.N() >= 2 ? binomial_u64(table.N(), 2) : 0;
  if (table.pair_count() != expected) {
    return ValidationReport::bad("length", std::nullopt, "table must have C(N, 2) entries");
  }
  const auto colors = table.colors();
  for (std::uint64_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 0 || colors[i] >= table.c()) {
      return ValidationReport::bad("color-range", i, "entry outside [0, c)");
    }
  }
  return ValidationReport::good();
}

ValidationReport validate(const CompleteColoring& coloring) {
  const std::uint64_t expected = binomial_u64(coloring.N(), coloring.r());
  if (coloring.edge_count() != expected) {
    return ValidationReport::bad("length", std::nullopt, "coloring must have C(N, r) entries");
  }
  const auto colors = coloring.colors();
  for (std::uint64_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 0 || colors[i] >= coloring.c()) {
      return ValidationReport::bad("color-range", i, "entry outside [0, c)");
    }
  }
  return ValidationReport::good();
}

ValidationReport validate_witness(const BergeWitness& witness, const CompleteColoring& coloring) {
  const auto& core = witness.core;
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (core[i] < 0 || core[i] >= coloring.N()) {
      return ValidationReport::bad("core", i, "core vertex outside [0, N)");
    }
    if (i > 0 && core[i] <= core[i - 1]) {
      return ValidationReport::bad("core", i, "core not strictly increasing");
    }
  }
  const std::uint64_t n = core.size();
  const std::uint64_t expected_pairs = n >= 2 ? n * (n - 1) / 2 : 0;
  if (witness.assignment.size() != expected_pairs) {
    return ValidationReport::bad("pairs", std::nullopt, "assignment must cover each core pair once");
  }
  std::vector<std::pair<Vertex, Vertex>> seen_pairs;
  std::vector<std::vector<Vertex>> seen_edges;
  for (std::size_t i = 0; i < witness.assignment.size(); ++i) {
    const auto& entry = witness.assignment[i];
    if (entry.u >= entry.v || !std::binary_search(core.begin(), core.end(), entry.u) ||
        !std::binary_search(core.begin(), core.end(), entry.v)) {
      return ValidationReport::bad("pairs", i, "assigned pair is not a core pair");
    }
    seen_pairs.emplace_back(entry.u, entry.v);
    if (static_cast<int>(entry.edge.vertices.size()) != coloring.r()) {
      return ValidationReport::bad("edge-size", i, "assigned edge is not an r-subset");
    }
    for (std::size_t j = 0; j < entry.edge.vertices.size(); ++j) {
      const Vertex v = entry.edge.vertices[j];
      if (v < 0 || v >= coloring.N()) {
        return ValidationReport::bad("vertex-range", i, "edge vertex outside [0, N)");
      }
      if (j > 0 && v <= entry.edge.vertices[j - 1]) {
        return ValidationReport::bad("not-sorted", i, "edge vertices not strictly increasing");
      }
    }
    if (!entry.edge.contains_pair(entry.u, entry.v)) {
      return ValidationReport::bad("containment", i, "edge does not contain its pair");
    }
    if (witness.color && coloring.color_of(entry.edge.vertices) != *witness.color) {
      return ValidationReport::bad("color", i, "edge does not carry the witness color");
    }
    seen_edges.push_back(entry.edge.vertices);
  }
  std::sort(seen_pairs.begin(), seen_pairs.end());
  if (std::adjacent_find(seen_pairs.begin(), seen_pairs.end()) != seen_pairs.end()) {
    return ValidationReport::bad("pairs", std::nullopt, "a core pair is assigned twice");
  }
  std::sort(seen_edges.begin(), seen_edges.end());
  if (std::adjacent_find(seen_edges.begin(), seen_edges.end()) != seen_edges.end()) {
    return ValidationReport::bad("duplicate", std::nullopt, "two pairs share a hyperedge");
  }
  if (witness.color && (*witness.color < 0 || *witness.color >= coloring.c())) {
    return ValidationReport::bad("color", std::nullopt, "witness color outside [0, c)");
  }
  return ValidationReport::good();
}

}  // namespace berge
