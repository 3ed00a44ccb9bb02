#pragma once

#include <optional>

#include "berge/combinat.hpp"

namespace berge {

// Upper bound on the expected number of monochromatic Berge cliques realized
// by a rule-respecting coloring under a uniformly random forbidden table:
// c * C(N, n) * ((c - 1) / c)^C(n, 2).  Zero when N < n.
BigRational expected_mono_upper(int N, int n, int c);

// Largest N whose expectation bound stays below 1; scanning starts at N = n.
// Throws DegenerateError when already expected_mono_upper(n, n, c) >= 1.
int threshold_N(int n, int c);

// The lower-bound guarantee (1 + 1/r^2)^(n - 1), exactly.
BigRational theorem_bound(int r, int n);

// Whether c = C(r, 2) + 1 colors make the probabilistic threshold reach the
// advertised bound: (1 + 1/r^2)^2 <= c / (c - 1), checked exactly.
// Throws RNotSupportedError for r < 3.
bool sufficiency_check(int r);

// Closed-form values in the many-colors regime: n when r > 2c, n + 1 when
// r = 2c, unknown otherwise (the first open case is r = c = 3).
std::optional<int> known_exact(int r, int c, int n);

// Upper bound 2n for 3-uniform hosts with 2 colors.
int known_upper_3_2(int n);

struct BoundReport {
  int r = 0;
  int n = 0;
  int c = 0;
  std::optional<int> threshold;              // absent when the scan degenerates
  std::optional<BigRational> expectation;    // expectation bound at `threshold`
  BigRational guarantee;                     // theorem_bound(r, n)
  bool sufficiency = false;                  // sufficiency_check(r)
};

// Bundles the bound computations for one (r, n) instance.  c defaults to
// C(r, 2) + 1.  Throws RNotSupportedError for r < 3.
BoundReport bound_report(int r, int n, std::optional<int> c = std::nullopt);

}  // namespace berge
