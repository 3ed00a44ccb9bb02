#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "berge/berge.hpp"
#include "support/oracles.hpp"

using namespace berge;

namespace {

BipartiteInstance instance_of(std::vector<std::vector<std::uint64_t>> adjacency) {
  return BipartiteInstance{std::move(adjacency)};
}

// Matched rights must be distinct, taken from the adjacency lists, and the
// reported size must count the matched lefts.
void check_matching_consistent(const BipartiteInstance& instance, const Matching& matching) {
  REQUIRE(matching.pairing.size() == instance.adjacency.size());
  std::vector<std::uint64_t> used;
  std::size_t matched = 0;
  for (std::size_t u = 0; u < matching.pairing.size(); ++u) {
    if (!matching.pairing[u]) continue;
    ++matched;
    const std::uint64_t right = *matching.pairing[u];
    const auto& row = instance.adjacency[u];
    CHECK(std::find(row.begin(), row.end(), right) != row.end());
    used.push_back(right);
  }
  CHECK(matched == matching.size);
  std::sort(used.begin(), used.end());
  CHECK(std::adjacent_find(used.begin(), used.end()) == used.end());
}

}  // namespace

TEST_SUITE("berge") {

TEST_CASE("maximum matching on hand-checked instances") {
  const auto bowtie = instance_of({{0, 1}, {0}, {1}});
  const auto m = max_matching(bowtie);
  CHECK(m.size == 2);
  check_matching_consistent(bowtie, m);

  CHECK(max_matching(instance_of({{0}, {1}, {2}})).size == 3);
  CHECK(max_matching(instance_of({{0}, {0}, {0}})).size == 1);
  CHECK(max_matching(instance_of({})).size == 0);
  CHECK(max_matching(instance_of({{}, {5}})).size == 1);

  // Augmenting path: the second left evicts the first from right 0.
  const auto chain = instance_of({{0, 1}, {0}});
  const auto cm = max_matching(chain);
  CHECK(cm.size == 2);
  REQUIRE(cm.pairing[0].has_value());
  REQUIRE(cm.pairing[1].has_value());
  CHECK(*cm.pairing[0] == 1);
  CHECK(*cm.pairing[1] == 0);
}

TEST_CASE("matching works with sparse right ids") {
  // Right ids are colex ranks in practice, so nothing may assume density.
  const auto sparse = instance_of({{1000000007, 42}, {42}, {1000000007}});
  const auto m = max_matching(sparse);
  CHECK(m.size == 2);
  check_matching_consistent(sparse, m);
}

TEST_CASE("random matchings agree with the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const int lefts = 1 + static_cast<int>(rng() % 6);
    const int rights = 1 + static_cast<int>(rng() % 6);
    BipartiteInstance instance;
    instance.adjacency.resize(lefts);
    for (auto& row : instance.adjacency) {
      for (std::uint64_t right = 0; right < static_cast<std::uint64_t>(rights); ++right) {
        if (rng() % 3 == 0) row.push_back(right);
      }
    }
    const auto fast = max_matching(instance);
    check_matching_consistent(instance, fast);
    CHECK(fast.size == oracle::max_matching_brute(instance));
  }
}

TEST_CASE("instances beyond 64 lefts take the layered path") {
  BipartiteInstance singletons;
  singletons.adjacency.resize(65);
  for (std::size_t i = 0; i < 65; ++i) singletons.adjacency[i] = {i};
  CHECK(max_matching(singletons).size == 65);

  BipartiteInstance crowded;
  crowded.adjacency.resize(70);
  for (std::size_t i = 0; i < 70; ++i) crowded.adjacency[i] = {i % 35};
  const auto m = max_matching(crowded);
  CHECK(m.size == 35);
  check_matching_consistent(crowded, m);
}

TEST_CASE("padding with isolated lefts changes the algorithm but not the size") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    BipartiteInstance narrow;
    narrow.adjacency.resize(60);
    for (auto& row : narrow.adjacency) {
      for (std::uint64_t right = 0; right < 40; ++right) {
        if (rng() % 4 == 0) row.push_back(right);
      }
    }
    BipartiteInstance wide = narrow;
    wide.adjacency.resize(70);  // 10 isolated lefts push it over the threshold
    const auto kuhn = max_matching(narrow);
    const auto layered = max_matching(wide);
    CHECK(kuhn.size == layered.size);
    check_matching_consistent(wide, layered);
  }
}

TEST_CASE("mono Berge clique on a fixed core") {
  const CompleteColoring all_zero = CompleteColoring::constant(4, 3, 1, 0);
  const std::vector<Vertex> core{0, 1, 2};

  const auto witness = mono_berge_clique_on(all_zero, core, 0);
  REQUIRE(witness.has_value());
  CHECK(witness->core == core);
  REQUIRE(witness->color.has_value());
  CHECK(*witness->color == 0);
  REQUIRE(witness->assignment.size() == 3);
  CHECK(witness->assignment[0].edge.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(witness->assignment[1].edge.vertices == std::vector<Vertex>{0, 2, 3});
  CHECK(witness->assignment[2].edge.vertices == std::vector<Vertex>{1, 2, 3});
  CHECK(validate_witness(*witness, all_zero).ok);

  // Deterministic: the same call yields the same assignment.
  const auto again = mono_berge_clique_on(all_zero, core, 0);
  REQUIRE(again.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(again->assignment[i].edge.vertices == witness->assignment[i].edge.vertices);
  }
}

TEST_CASE("a two-two split of the complete 3-graph on four vertices has no witness") {
  const CompleteColoring split(4, 3, 2, {0, 0, 1, 1});
  CHECK(!mono_berge_clique_on(split, std::vector<Vertex>{0, 1, 2}, 0).has_value());
  CHECK(!mono_berge_clique_on(split, std::vector<Vertex>{0, 1, 2}, 1).has_value());
  CHECK(!find_mono_berge_clique(split, 3).has_value());
}

TEST_CASE("core and color arguments are validated") {
  const CompleteColoring all_zero = CompleteColoring::constant(4, 3, 1, 0);
  CHECK_THROWS_AS(mono_berge_clique_on(all_zero, std::vector<Vertex>{0, 1, 2}, 1), BadColorError);
  CHECK_THROWS_AS(mono_berge_clique_on(all_zero, std::vector<Vertex>{1, 0, 2}, 0), NotSortedError);
  CHECK_THROWS_AS(mono_berge_clique_on(all_zero, std::vector<Vertex>{0, 1, 4}, 0),
                  OutOfRangeError);
}

TEST_CASE("scan returns the least witness by color then core rank") {
  const CompleteColoring all_zero = CompleteColoring::constant(5, 3, 1, 0);
  const auto least = find_mono_berge_clique(all_zero, 3);
  REQUIRE(least.has_value());
  CHECK(*least->color == 0);
  CHECK(least->core == std::vector<Vertex>{0, 1, 2});
  CHECK(validate_witness(*least, all_zero).ok);

  // Color 0 owns a single hyperedge, so the first witness lives in color 1.
  const CompleteColoring tilted(4, 3, 2, {0, 1, 1, 1});
  const auto shifted = find_mono_berge_clique(tilted, 3);
  REQUIRE(shifted.has_value());
  CHECK(*shifted->color == 1);
  CHECK(shifted->core == std::vector<Vertex>{0, 1, 2});
  CHECK(validate_witness(*shifted, tilted).ok);
}

TEST_CASE("scan edge cases") {
  const CompleteColoring empty(2, 3, 2, {});
  CHECK(!find_mono_berge_clique(empty, 3).has_value());  // n exceeds N
  CHECK_THROWS_AS(find_mono_berge_clique(empty, 1), OutOfRangeError);
}

TEST_CASE("scan is independent of the worker count") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> colors(binomial_u64(7, 3));
    for (auto& chi : colors) chi = static_cast<int>(rng() % 2);
    const CompleteColoring coloring(7, 3, 2, std::move(colors));

    const auto solo = find_mono_berge_clique(coloring, 3, 1);
    const auto pooled = find_mono_berge_clique(coloring, 3, 4);
    REQUIRE(solo.has_value() == pooled.has_value());
    if (!solo) continue;
    CHECK(solo->core == pooled->core);
    CHECK(*solo->color == *pooled->color);
    CHECK(validate_witness(*pooled, coloring).ok);
    for (std::size_t i = 0; i < solo->assignment.size(); ++i) {
      CHECK(solo->assignment[i].edge.vertices == pooled->assignment[i].edge.vertices);
    }
  }
}

TEST_CASE("Berge embedding of simple patterns") {
  Hypergraph host;
  host.vertex_count = 4;
  host.uniform_rank = 3;
  host.edges = {HyperEdge{{0, 1, 2}}, HyperEdge{{1, 2, 3}}};

  SimpleGraph path;  // 0 - 1 - 2
  path.vertex_count = 3;
  path.edges = {{0, 1}, {1, 2}};
  const auto embedding = berge_embeds(host, path);
  REQUIRE(embedding.has_value());
  // The embedding must be injective and honor pair containment.
  std::vector<Vertex> image = embedding->vertex_map;
  REQUIRE(image.size() == 3);
  std::sort(image.begin(), image.end());
  CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
  REQUIRE(embedding->edge_map.size() == 2);
  CHECK(embedding->edge_map[0] != embedding->edge_map[1]);
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    const auto [a, b] = path.edges[i];
    const auto& host_edge = host.edges[embedding->edge_map[i]];
    CHECK(host_edge.contains_pair(embedding->vertex_map[a], embedding->vertex_map[b]));
  }

  SimpleGraph triangle;
  triangle.vertex_count = 3;
  triangle.edges = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(!berge_embeds(host, triangle).has_value());  // only two host edges

  SimpleGraph wide;
  wide.vertex_count = 5;
  CHECK(!berge_embeds(host, wide).has_value());  // more vertices than the host

  SimpleGraph lonely;  // edgeless patterns embed whenever the vertices fit
  lonely.vertex_count = 2;
  CHECK(berge_embeds(host, lonely).has_value());
}

TEST_CASE("embedding guards") {
  SimpleGraph triangle;
  triangle.vertex_count = 3;
  triangle.edges = {{0, 1}, {0, 2}, {1, 2}};

  Hypergraph giant;
  giant.vertex_count = 65;
  CHECK_THROWS_AS(berge_embeds(giant, triangle), TooLargeError);

  const Hypergraph k4 = complete_uniform(4, 3);
  CHECK(berge_embeds(k4, triangle).has_value());
  CHECK_THROWS_AS(berge_embeds(k4, triangle, 1), TooLargeError);
}

TEST_CASE("embedding decisions agree with the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);

    Hypergraph host;
    host.vertex_count = 3 + static_cast<int>(rng() % 3);
    const int edge_count = static_cast<int>(rng() % 6);
    for (int i = 0; i < edge_count; ++i) {
      const int size = 2 + static_cast<int>(rng() % 2);
      std::vector<Vertex> verts(host.vertex_count);
      for (int v = 0; v < host.vertex_count; ++v) verts[v] = v;
      std::shuffle(verts.begin(), verts.end(), rng);
      verts.resize(size);
      std::sort(verts.begin(), verts.end());
      const HyperEdge edge{verts};
      const auto match = [&](const HyperEdge& other) { return other.vertices == edge.vertices; };
      if (std::find_if(host.edges.begin(), host.edges.end(), match) == host.edges.end()) {
        host.edges.push_back(edge);
      }
    }

    SimpleGraph pattern;
    pattern.vertex_count = 2 + static_cast<int>(rng() % 3);
    for (Vertex v = 1; v < pattern.vertex_count; ++v) {
      for (Vertex u = 0; u < v; ++u) {
        if (rng() % 2 == 0) pattern.edges.emplace_back(u, v);
      }
    }

    const auto fast = berge_embeds(host, pattern);
    const bool brute = oracle::berge_contains_brute(host, pattern);
    CHECK(fast.has_value() == brute);
    if (fast) {
      std::vector<Vertex> image = fast->vertex_map;
      std::sort(image.begin(), image.end());
      CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
      std::vector<std::size_t> edges = fast->edge_map;
      std::sort(edges.begin(), edges.end());
      CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
      for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
        const auto [a, b] = pattern.edges[i];
        CHECK(host.edges[fast->edge_map[i]].contains_pair(fast->vertex_map[a],
                                                          fast->vertex_map[b]));
      }
    }
  }
}

}  // TEST_SUITE
