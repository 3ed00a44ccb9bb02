#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "berge/berge.hpp"
#include "berge/construct.hpp"

using namespace berge;

namespace {

// Recompute the (core, color) compatibility count straight from the
// definition: chi survives a core when no core pair carries chi in the table.
std::uint64_t compatible_brute(const ForbiddenTable& table, int n) {
  std::uint64_t total = 0;
  for (const auto& core : ColexSubsets(table.N(), n)) {
    for (int chi = 0; chi < table.c(); ++chi) {
      bool alive = true;
      for (std::size_t j = 1; j < core.size() && alive; ++j) {
        for (std::size_t i = 0; i < j && alive; ++i) {
          if (table.color_of(core[i], core[j]) == chi) alive = false;
        }
      }
      if (alive) ++total;
    }
  }
  return total;
}

// Every color strictly below the chosen one must be forbidden by some pair of
// the edge, and the chosen one by none.
void check_least_allowed(const ForbiddenTable& table, const CompleteColoring& coloring) {
  ColexSubsets edges(coloring.N(), coloring.r());
  auto it = edges.begin();
  const auto stop = edges.end();
  for (; it != stop; ++it) {
    const auto& edge = *it;
    const int chosen = coloring.color_at(it.rank());
    std::vector<bool> banned(coloring.c(), false);
    for (std::size_t j = 1; j < edge.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) banned[table.color_of(edge[i], edge[j])] = true;
    }
    CHECK(!banned[chosen]);
    for (int chi = 0; chi < chosen; ++chi) CHECK(banned[chi]);
  }
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("random tables are reproducible and valid") {
  const ForbiddenTable table = random_forbidden(6, 4, 2026);
  CHECK(validate(table).ok);
  CHECK(std::ranges::equal(table.colors(), random_forbidden(6, 4, 2026).colors()));

  bool some_seed_differs = false;
  for (std::uint64_t seed = 0; seed < 5 && !some_seed_differs; ++seed) {
    some_seed_differs = !std::ranges::equal(random_forbidden(6, 4, seed).colors(), table.colors());
  }
  CHECK(some_seed_differs);

  CHECK_THROWS_AS(random_forbidden(1, 2, 0), OutOfRangeError);
  CHECK_THROWS_AS(random_forbidden(6, 0, 0), OutOfRangeError);
}

TEST_CASE("each pair is keyed by its rank, not by the vertex count") {
  // Pair ranks are universe-independent, so growing N only appends entries.
  const ForbiddenTable small = random_forbidden(6, 4, 77);
  const ForbiddenTable large = random_forbidden(7, 4, 77);
  REQUIRE(large.pair_count() == 21);
  for (std::uint64_t rank = 0; rank < small.pair_count(); ++rank) {
    CHECK(small.color_at(rank) == large.color_at(rank));
  }
}

TEST_CASE("table entries are close to uniform across seeds") {
  // One fixed pair, 100000 seeds; chi-square against the uniform law.  The
  // stream is deterministic, so this either always passes or never does.
  const auto chi_square = [](int c, double* out) {
    std::vector<std::uint64_t> counts(c, 0);
    for (std::uint64_t seed = 0; seed < 100000; ++seed) {
      ++counts[random_forbidden(6, c, seed).color_at(7)];
    }
    const double expected = 100000.0 / c;
    double stat = 0.0;
    for (int chi = 0; chi < c; ++chi) {
      const double diff = static_cast<double>(counts[chi]) - expected;
      stat += diff * diff / expected;
    }
    *out = stat;
  };
  double stat4 = 0.0;
  chi_square(4, &stat4);
  CHECK(stat4 < 11.345);  // 99th percentile, three degrees of freedom
  double stat3 = 0.0;
  chi_square(3, &stat3);
  CHECK(stat3 < 9.210);  // 99th percentile, two degrees of freedom
}

TEST_CASE("least-allowed coloring avoids every forbidden pair color") {
  const ForbiddenTable all_zero(4, 2);
  const CompleteColoring coloring = respecting_coloring(all_zero, 3);
  for (std::uint64_t rank = 0; rank < coloring.edge_count(); ++rank) {
    CHECK(coloring.color_at(rank) == 1);
  }

  const ForbiddenTable random_table = random_forbidden(7, 4, 31);
  const CompleteColoring least = respecting_coloring(random_table, 3);
  CHECK(validate(least).ok);
  check_least_allowed(random_table, least);

  // Pairs themselves are edges when r = 2.
  const CompleteColoring pairs = respecting_coloring(random_table, 2);
  for (std::uint64_t rank = 0; rank < pairs.edge_count(); ++rank) {
    CHECK(pairs.color_at(rank) != random_table.color_at(rank));
  }
}

TEST_CASE("an edge with every color forbidden raises NoAllowedColorError") {
  const ForbiddenTable saturated(3, 3, {0, 1, 2});
  try {
    respecting_coloring(saturated, 3);
    FAIL("expected NoAllowedColorError");
  } catch (const NoAllowedColorError& error) {
    CHECK(error.edge_rank == 0);
  }

  // One extra color unblocks the same table.
  const ForbiddenTable relaxed(3, 4, {0, 1, 2});
  const CompleteColoring coloring = respecting_coloring(relaxed, 3);
  CHECK(coloring.color_at(0) == 3);
}

TEST_CASE("fixed preference policies reorder the choice") {
  const ForbiddenTable all_zero(5, 4);
  const FixedPreference prefer{{3, 1, 0, 2}};
  const CompleteColoring coloring = respecting_coloring(all_zero, 3, prefer);
  for (std::uint64_t rank = 0; rank < coloring.edge_count(); ++rank) {
    CHECK(coloring.color_at(rank) == 3);
  }

  CHECK_THROWS_AS(respecting_coloring(all_zero, 3, FixedPreference{{0, 1}}), BadColorError);
  CHECK_THROWS_AS(respecting_coloring(all_zero, 3, FixedPreference{{0, 0, 1, 2}}), BadColorError);
  CHECK_THROWS_AS(respecting_coloring(all_zero, 3, FixedPreference{{0, 1, 2, 4}}), BadColorError);
}

TEST_CASE("random policies stay within the allowed colors") {
  const ForbiddenTable table = random_forbidden(6, 4, 11);
  const CompleteColoring first = respecting_coloring(table, 3, RandomAllowed{5});
  const CompleteColoring second = respecting_coloring(table, 3, RandomAllowed{5});
  CHECK(std::ranges::equal(first.colors(), second.colors()));

  const CompleteColoring other = respecting_coloring(table, 3, RandomAllowed{6});
  CHECK(!std::ranges::equal(first.colors(), other.colors()));

  ColexSubsets edges(6, 3);
  auto it = edges.begin();
  const auto stop = edges.end();
  for (; it != stop; ++it) {
    const auto& edge = *it;
    const int chosen = first.color_at(it.rank());
    for (std::size_t j = 1; j < edge.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        CHECK(table.color_of(edge[i], edge[j]) != chosen);
      }
    }
  }
}

TEST_CASE("rank bounds on r are enforced") {
  const ForbiddenTable table(6, 3);
  CHECK_THROWS_AS(respecting_coloring(table, 1), OutOfRangeError);
  CHECK_THROWS_AS(respecting_coloring(table, 7), OutOfRangeError);
}

TEST_CASE("compatible pair counting") {
  CHECK(compatible_count(ForbiddenTable(3, 3, {0, 1, 2}), 3) == 0);
  CHECK(compatible_count(ForbiddenTable(3, 4, {0, 1, 2}), 3) == 1);
  // All-zero tables leave c - 1 colors alive on each of the C(4, 3) cores.
  CHECK(compatible_count(ForbiddenTable(4, 2), 3) == 4);
  CHECK(compatible_count(ForbiddenTable(4, 5), 3) == 16);
  CHECK(compatible_count(ForbiddenTable(4, 3), 5) == 0);  // n exceeds N
  CHECK_THROWS_AS(compatible_count(ForbiddenTable(4, 3), 1), OutOfRangeError);

  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const ForbiddenTable table = random_forbidden(5, 3, seed);
    CHECK(compatible_count(table, 3) == compatible_brute(table, 3));
    CHECK(compatible_count(table, 4) == compatible_brute(table, 4));
  }
}

TEST_CASE("derandomization pins the worked three-vertex example") {
  std::vector<BigRational> trace;
  const Certificate cert = derandomize_forbidden(3, 3, 2, &trace);
  CHECK(cert.n == 3);
  CHECK(cert.compatible == 0);
  CHECK(cert.initial_expectation == BigRational(1, 4));
  CHECK(std::ranges::equal(cert.forbidden.colors(), std::vector<int>{0, 1, 0}));
  REQUIRE(trace.size() == 4);
  CHECK(trace[0] == BigRational(1, 4));
  CHECK(trace[1] == BigRational(1, 4));
  CHECK(trace[2] == BigRational(0));
  CHECK(trace[3] == BigRational(0));
}

TEST_CASE("the potential never increases and lands on the true count") {
  std::vector<BigRational> trace;
  const Certificate cert = derandomize_forbidden(6, 4, 3, &trace);
  REQUIRE(trace.size() == 16);  // C(6, 2) pairs plus the initial potential
  CHECK(trace.front() == BigRational(2880, 729));
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1]);
  CHECK(trace.back() == BigRational(cert.compatible));
  CHECK(cert.compatible == compatible_count(cert.forbidden, 4));
  CHECK(validate(cert.forbidden).ok);
}

TEST_CASE("a sub-unit expectation derandomizes to zero compatible pairs") {
  const Certificate cert = derandomize_forbidden(7, 6, 4);
  CHECK(cert.initial_expectation < 1);
  CHECK(cert.compatible == 0);
  // The rule-respecting coloring of the full 3-graph is then witness-free.
  const CompleteColoring coloring = respecting_coloring(cert.forbidden, 3);
  CHECK(!find_mono_berge_clique(coloring, 6).has_value());
}

TEST_CASE("derandomization argument guards") {
  CHECK_THROWS_AS(derandomize_forbidden(1, 3, 2), OutOfRangeError);
  CHECK_THROWS_AS(derandomize_forbidden(5, 1, 2), OutOfRangeError);
  CHECK_THROWS_AS(derandomize_forbidden(5, 3, 1), OutOfRangeError);
}

TEST_CASE("Monte Carlo estimates are deterministic and worker-independent") {
  const MonoEstimate solo = estimate_mono_probability(6, 3, 3, 2, 64, 9);
  const MonoEstimate pooled = estimate_mono_probability(6, 3, 3, 2, 64, 9, LeastAllowed{}, 3);
  CHECK(solo.trials == 64);
  CHECK(solo.hits == pooled.hits);
  CHECK(solo.infeasible == pooled.infeasible);
  CHECK(solo.fraction == doctest::Approx(pooled.fraction));
  CHECK(solo.wilson_low == doctest::Approx(pooled.wilson_low));
  CHECK(solo.wilson_high == doctest::Approx(pooled.wilson_high));
  CHECK(solo.wilson_low <= solo.fraction);
  CHECK(solo.fraction <= solo.wilson_high);
  CHECK(solo.wilson_high <= 1.0);
}

TEST_CASE("Monte Carlo edge cases") {
  CHECK_THROWS_AS(estimate_mono_probability(6, 3, 3, 2, 0, 1), ZeroTrialsError);

  // Hosts smaller than the core can never contain a witness.
  const MonoEstimate tiny = estimate_mono_probability(3, 4, 3, 2, 32, 5);
  CHECK(tiny.hits == 0);
  CHECK(tiny.fraction == 0.0);

  // With two colors and a three-pair edge, many tables are infeasible; a
  // single host edge can never carry a Berge triangle either way.
  const MonoEstimate cramped = estimate_mono_probability(3, 3, 3, 2, 200, 17);
  CHECK(cramped.hits == 0);
  CHECK(cramped.infeasible > 0);
  CHECK(cramped.infeasible < 200);
}

}  // TEST_SUITE
