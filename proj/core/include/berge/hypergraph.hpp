#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "berge/combinat.hpp"
#include "berge/errors.hpp"

namespace berge {

// A hyperedge over vertices [0, 64), stored as a strictly increasing list.
struct HyperEdge {
  std::vector<Vertex> vertices;

  std::uint64_t mask() const;
  bool contains(Vertex v) const;
  bool contains_pair(Vertex u, Vertex v) const;

  bool operator==(const HyperEdge& other) const = default;
};

std::string to_string(const HyperEdge& edge);

struct Hypergraph {
  int vertex_count = 0;
  std::vector<HyperEdge> edges;
  // Set when every edge has the same size; builders keep it in sync, and
  // validate() flags a stored value that disagrees with the edges.
  std::optional<int> uniform_rank;
};

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // each pair (u, v) with u < v
};

// K_n as a SimpleGraph, edges listed in colexicographic pair order.
SimpleGraph complete_graph(int n);

// The complete r-uniform hypergraph on [0, N), edges in colexicographic order.
Hypergraph complete_uniform(int N, int r);

// One forbidden color per vertex pair of [0, N), indexed by colex pair rank.
// Instances are immutable once built; construction enforces N <= 64 and
// c >= 1, while content-level invariants are reported by validate().
class ForbiddenTable {
 public:
  ForbiddenTable(int N, int c);  // all entries 0
  ForbiddenTable(int N, int c, std::vector<int> colors);

  int N() const { return N_; }
  int c() const { return c_; }
  std::uint64_t pair_count() const { return colors_.size(); }
  int color_at(std::uint64_t rank) const;
  int color_of(Vertex u, Vertex v) const;
  std::span<const int> colors() const { return colors_; }

 private:
  int N_;
  int c_;
  std::vector<int> colors_;
};

// A c-coloring of all r-subsets of [0, N), indexed by colex rank.  Immutable;
// construction enforces N <= 64, 1 <= r, c >= 1 and refuses tables larger
// than kMaxDenseTable entries.
class CompleteColoring {
 public:
  CompleteColoring(int N, int r, int c, std::vector<int> colors);
  static CompleteColoring constant(int N, int r, int c, int color);

  int N() const { return N_; }
  int r() const { return r_; }
  int c() const { return c_; }
  std::uint64_t edge_count() const { return colors_.size(); }
  int color_at(std::uint64_t rank) const;
  int color_of(std::span<const Vertex> edge) const;
  std::span<const int> colors() const { return colors_; }

 private:
  int N_;
  int r_;
  int c_;
  std::vector<int> colors_;
};

// All r-subsets of [0, N) that contain the pair {u, v} and carry color chi,
// in colexicographic order.
std::vector<HyperEdge> pair_star(const CompleteColoring& coloring, Vertex u, Vertex v, int chi);

// A Berge copy of the complete graph on `core`: each core pair is assigned a
// distinct hyperedge containing it.  When found inside one color class of a
// CompleteColoring, `color` records that class.
struct BergeWitness {
  struct PairAssignment {
    Vertex u = 0;
    Vertex v = 0;
    HyperEdge edge;
  };

  std::vector<Vertex> core;
  std::vector<PairAssignment> assignment;
  std::optional<int> color;
};

// First violated invariant of an object, or ok.  `violation` is a short
// stable name ("length", "duplicate", ...) and `index` locates the offender.
struct ValidationReport {
  bool ok = true;
  std::string violation;
  std::optional<std::uint64_t> index;
  std::string detail;

  static ValidationReport good() { return ValidationReport{}; }
  static ValidationReport bad(std::string violation, std::optional<std::uint64_t> index,
                              std::string detail);
};

ValidationReport validate(const Hypergraph& h);
ValidationReport validate(const ForbiddenTable& table);
ValidationReport validate(const CompleteColoring& coloring);

// Checks a witness against a coloring: core sorted inside [0, N), assignment
// covering each core pair exactly once with distinct edges, every edge an
// r-subset containing its pair, and every edge carrying witness.color.
ValidationReport validate_witness(const BergeWitness& witness, const CompleteColoring& coloring);

}  // namespace berge
