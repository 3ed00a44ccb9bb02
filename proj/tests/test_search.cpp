#include <doctest.h>

#include "berge/berge.hpp"
#include "berge/search.hpp"

using namespace berge;

TEST_SUITE("search") {

TEST_CASE("four vertices admit a witness-free two-coloring of the 3-graph") {
  const SearchOutcome outcome = ramsey_decide(3, 2, 3, 4);
  CHECK(!outcome.arrows);
  REQUIRE(outcome.counterexample.has_value());
  CHECK(validate(*outcome.counterexample).ok);
  CHECK(!find_mono_berge_clique(*outcome.counterexample, 3).has_value());
  // With the first edge pinned to color 0, the solver backtracks through the
  // documented number of assignments before reaching this leaf.
  CHECK(outcome.explored == 6);
}

TEST_CASE("five vertices force a monochromatic Berge triangle with two colors") {
  const SearchOutcome outcome = ramsey_decide(3, 2, 3, 5);
  CHECK(outcome.arrows);
  CHECK(!outcome.counterexample.has_value());
  CHECK(outcome.explored > 0);
}

TEST_CASE("the scan pins the documented Berge-Ramsey values") {
  const RamseyScan triangle = ramsey_number_exact(3, 2, 3, 6);
  REQUIRE(triangle.value.has_value());
  CHECK(*triangle.value == 5);
  CHECK(triangle.searched_max == 5);

  // A Berge edge needs one hyperedge containing the pair; with one color the
  // first host with any edge at all arrows, with two colors both classes bite.
  const RamseyScan single = ramsey_number_exact(3, 1, 3, 6);
  CHECK(single.value == 4);
  const RamseyScan pair_host = ramsey_number_exact(3, 2, 2, 4);
  CHECK(pair_host.value == 3);

  // Graph case agrees with the classical Ramsey number R(3, 3) = 6.
  const RamseyScan classical = ramsey_number_exact(2, 2, 3, 6);
  CHECK(classical.value == 6);
  CHECK(!ramsey_decide(2, 2, 3, 5).arrows);
}

TEST_CASE("hosts below the uniformity have only the empty coloring") {
  const SearchOutcome outcome = ramsey_decide(3, 2, 3, 2);
  CHECK(!outcome.arrows);
  REQUIRE(outcome.counterexample.has_value());
  CHECK(outcome.counterexample->edge_count() == 0);
  CHECK(outcome.explored == 0);
}

TEST_CASE("a core larger than the host never arrows") {
  CHECK(!ramsey_decide(3, 2, 7, 5).arrows);
}

TEST_CASE("the verdict is independent of symmetry breaking") {
  SearchOptions plain;
  plain.fix_first_edge_color = false;
  SearchOptions canonized;
  canonized.vertex_canonization = true;

  for (int N = 3; N <= 5; ++N) {
    const bool expected = ramsey_decide(3, 2, 3, N).arrows;
    CHECK(ramsey_decide(3, 2, 3, N, plain).arrows == expected);
    CHECK(ramsey_decide(3, 2, 3, N, canonized).arrows == expected);
  }
  CHECK(ramsey_decide(2, 2, 3, 5, canonized).arrows == ramsey_decide(2, 2, 3, 5).arrows);
  CHECK(ramsey_decide(2, 2, 3, 6, canonized).arrows);

  // Symmetry breaking only ever shrinks the explored count.
  const SearchOutcome baseline = ramsey_decide(3, 2, 3, 5, plain);
  const SearchOutcome fixed = ramsey_decide(3, 2, 3, 5);
  CHECK(fixed.explored <= baseline.explored);
}

TEST_CASE("canonization is refused beyond eight vertices") {
  SearchOptions canonized;
  canonized.vertex_canonization = true;
  // 2^C(9, 2) nominal leaves fit the default budget, so the refusal is the
  // canonizer's own N <= 8 limit.
  CHECK_THROWS_AS(ramsey_decide(2, 2, 3, 9, canonized), TooLargeError);
}

TEST_CASE("nominal budgets refuse oversized searches") {
  SearchOptions tight;
  tight.max_nominal_leaves = 1000;
  // 2^C(6, 3) = 2^20 nominal leaves exceed the budget of one thousand.
  CHECK_THROWS_AS(ramsey_decide(3, 2, 3, 6, tight), BudgetExceededError);
  CHECK_THROWS_AS(ramsey_number_exact(3, 2, 3, 6, tight), BudgetExceededError);

  // A budget that admits the full tree changes nothing.
  SearchOptions roomy;
  roomy.max_nominal_leaves = std::uint64_t{1} << 21;
  CHECK(ramsey_decide(3, 2, 3, 6, roomy).arrows);
}

TEST_CASE("scan bookkeeping when no host arrows") {
  const RamseyScan scan = ramsey_number_exact(3, 2, 3, 4);
  CHECK(!scan.value.has_value());
  CHECK(scan.searched_max == 4);
  CHECK(scan.explored > 0);
  CHECK_THROWS_AS(ramsey_number_exact(3, 2, 5, 4), OutOfRangeError);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ramsey_decide(1, 2, 3, 4), OutOfRangeError);
  CHECK_THROWS_AS(ramsey_decide(3, 0, 3, 4), OutOfRangeError);
  CHECK_THROWS_AS(ramsey_decide(3, 2, 1, 4), OutOfRangeError);
  CHECK_THROWS_AS(ramsey_decide(3, 2, 3, 65), OutOfRangeError);
}

}  // TEST_SUITE
