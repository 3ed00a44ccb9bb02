#include "berge/bounds.hpp"

namespace berge {

BigRational expected_mono_upper(int N, int n, int c) {
  if (N < 0) throw OutOfRangeError("expected_mono_upper: N must be >= 0");
  if (n < 2) throw OutOfRangeError("expected_mono_upper: n must be >= 2");
  if (c < 2) throw OutOfRangeError("expected_mono_upper: c must be >= 2");
  if (N < n) return BigRational(0);
  const std::uint64_t pairs = binomial_u64(n, 2);
  const BigRational miss(c - 1, c);
  return BigRational(c) * BigRational(binomial(N, n)) * rational_pow(miss, pairs);
}

int threshold_N(int n, int c) {
  if (n < 2) throw OutOfRangeError("threshold_N: n must be >= 2");
  if (c < 2) throw OutOfRangeError("threshold_N: c must be >= 2");
  BigRational expectation = expected_mono_upper(n, n, c);
  if (expectation >= 1) {
    throw DegenerateError("threshold_N: expectation already >= 1 at N = n");
  }
  // E(N + 1) = E(N) * (N + 1) / (N + 1 - n); strictly increasing, so the scan
  // stops at the last N with E(N) < 1.
  int N = n;
  for (;;) {
    const BigRational next = expectation * BigRational(N + 1, N + 1 - n);
    if (next >= 1) return N;
    expectation = next;
    ++N;
    if (N > (1 << 24)) throw TooLargeError("threshold_N: scan did not terminate");
  }
}

BigRational theorem_bound(int r, int n) {
  if (r < 1) throw OutOfRangeError("theorem_bound: r must be >= 1");
  if (n < 1) throw OutOfRangeError("theorem_bound: n must be >= 1");
  const std::int64_t rr = static_cast<std::int64_t>(r) * r;
  return rational_pow(BigRational(rr + 1, rr), static_cast<std::uint64_t>(n - 1));
}

bool sufficiency_check(int r) {
  if (r < 3) throw RNotSupportedError("sufficiency_check: requires r >= 3");
  const std::int64_t rr = static_cast<std::int64_t>(r) * r;
  const std::int64_t c = static_cast<std::int64_t>(binomial_u64(r, 2)) + 1;
  const BigRational lhs = rational_pow(BigRational(rr + 1, rr), 2);
  const BigRational rhs(c, c - 1);
  return lhs <= rhs;
}

std::optional<int> known_exact(int r, int c, int n) {
  if (r < 2) throw OutOfRangeError("known_exact: r must be >= 2");
  if (c < 1) throw OutOfRangeError("known_exact: c must be >= 1");
  if (n < 1) throw OutOfRangeError("known_exact: n must be >= 1");
  if (r > 2 * c) return n;
  if (r == 2 * c) return n + 1;
  return std::nullopt;
}

int known_upper_3_2(int n) {
  if (n < 2) throw OutOfRangeError("known_upper_3_2: n must be >= 2");
  return 2 * n;
}

BoundReport bound_report(int r, int n, std::optional<int> c) {
  if (r < 3) throw RNotSupportedError("bound_report: requires r >= 3");
  if (n < 1) throw OutOfRangeError("bound_report: n must be >= 1");
  BoundReport report;
  report.r = r;
  report.n = n;
  report.c = c ? *c : static_cast<int>(binomial_u64(r, 2)) + 1;
  if (report.c < 2) throw OutOfRangeError("bound_report: c must be >= 2");
  report.guarantee = theorem_bound(r, n);
  report.sufficiency = sufficiency_check(r);
  if (n >= 3) {
    try {
      report.threshold = threshold_N(n, report.c);
      report.expectation = expected_mono_upper(*report.threshold, n, report.c);
    } catch (const DegenerateError&) {
      // Leave threshold and expectation unset.
    }
  }
  return report;
}

}  // namespace berge
