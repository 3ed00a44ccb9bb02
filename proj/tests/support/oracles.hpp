#pragma once

#include <cstdint>
#include <vector>

#include "berge/berge.hpp"
#include "berge/hypergraph.hpp"

// Independent reference implementations used to cross-check the library.
// Everything here favors obviousness over speed and shares no code with the
// algorithms under test.
namespace berge::oracle {

// Pascal's triangle straight from the additive recurrence.
std::vector<std::vector<std::uint64_t>> pascal_triangle(int max_n);

// All k-subsets of [0, universe), generated by simple recursion and sorted
// with an element-wise colexicographic comparator (last element first).
std::vector<std::vector<Vertex>> colex_sorted_subsets(int universe, int k);

// Berge containment by exhaustive search over all injective vertex maps and
// all ways to assign distinct host edges to pattern edges.
bool berge_contains_brute(const Hypergraph& host, const SimpleGraph& pattern);

// Maximum matching size by trying every assignment.
std::size_t max_matching_brute(const BipartiteInstance& instance);

}  // namespace berge::oracle
