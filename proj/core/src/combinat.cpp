#include "berge/combinat.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace berge {
namespace {

std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> build_pascal() {
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> table{};
  for (int n = 0; n <= kMaxVertices; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
    }
  }
  return table;
}

const auto& pascal() {
  static const auto table = build_pascal();
  return table;
}

void check_increasing(std::span<const Vertex> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || (i > 0 && subset[i] <= subset[i - 1])) {
      std::ostringstream msg;
      msg << "subset not strictly increasing at position " << i;
      throw NotSortedError(msg.str());
    }
  }
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw OutOfRangeError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || n > kMaxVertices) throw OutOfRangeError("binomial_u64: n must be in [0, 64]");
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

std::uint64_t colex_rank(std::span<const Vertex> subset) {
  check_increasing(subset);
  if (!subset.empty() && subset.back() >= kMaxVertices) {
    throw OutOfRangeError("colex_rank: elements must be < 64");
  }
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += binomial_u64(subset[i], static_cast<int>(i) + 1);
  }
  return rank;
}

std::vector<Vertex> colex_unrank(std::uint64_t rank, int k) {
  if (k < 0 || k > kMaxVertices) throw OutOfRangeError("colex_unrank: k must be in [0, 64]");
  if (rank >= binomial_u64(kMaxVertices, k)) {
    throw OutOfRangeError("colex_unrank: rank out of range for subsets of [0, 64)");
  }
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  for (int i = k; i >= 1; --i) {
    // Largest a with C(a, i) <= rank; the scan start keeps a >= i - 1.
    int a = i - 1;
    while (a + 1 <= kMaxVertices && binomial_u64(a + 1, i) <= rank) ++a;
    subset[static_cast<std::size_t>(i - 1)] = a;
    rank -= binomial_u64(a, i);
  }
  return subset;
}

SubsetRank colex_rank_in(std::span<const Vertex> subset, int universe) {
  if (universe < 0 || universe > kMaxVertices) {
    throw OutOfRangeError("colex_rank_in: universe must be in [0, 64]");
  }
  if (!subset.empty() && subset.back() >= universe) {
    throw OutOfRangeError("colex_rank_in: element exceeds universe");
  }
  return SubsetRank{colex_rank(subset), static_cast<int>(subset.size()), universe};
}

std::vector<Vertex> colex_unrank(const SubsetRank& rank) {
  if (rank.universe < 0 || rank.universe > kMaxVertices) {
    throw OutOfRangeError("colex_unrank: universe must be in [0, 64]");
  }
  if (rank.value >= binomial_u64(rank.universe, rank.k)) {
    throw OutOfRangeError("colex_unrank: rank out of range for universe");
  }
  return colex_unrank(rank.value, rank.k);
}

std::uint64_t pair_rank(Vertex u, Vertex v) {
  if (u < 0 || u >= v) throw NotSortedError("pair_rank: requires 0 <= u < v");
  if (v >= kMaxVertices) throw OutOfRangeError("pair_rank: vertex must be < 64");
  return static_cast<std::uint64_t>(u) + binomial_u64(v, 2);
}

bool next_colex_subset(std::span<Vertex> subset, int universe) {
  const int k = static_cast<int>(subset.size());
  if (k == 0) return false;
  int i = 0;
  while (i + 1 < k && subset[i] + 1 == subset[i + 1]) {
    subset[i] = i;
    ++i;
  }
  ++subset[i];
  return subset[k - 1] < universe;
}

ColexSubsets::ColexSubsets(int universe, int k) : ColexSubsets(universe, k, 0, 0) {
  last_ = binomial_u64(universe, k);
}

ColexSubsets::ColexSubsets(int universe, int k, std::uint64_t first, std::uint64_t last)
    : universe_(universe), k_(k), first_(first), last_(last) {
  if (universe < 0 || universe > kMaxVertices || k < 0) {
    throw OutOfRangeError("ColexSubsets: universe must be in [0, 64] and k >= 0");
  }
  const std::uint64_t total = binomial_u64(universe, k);
  if (first_ > last_ || last_ > total) {
    throw OutOfRangeError("ColexSubsets: window out of range");
  }
}

ColexSubsets::iterator::iterator(int universe, int k, std::uint64_t rank, std::uint64_t last,
                                 bool materialize)
    : rank_(rank), last_(last), universe_(universe) {
  if (materialize && rank_ < last_) current_ = colex_unrank(rank_, k);
}

ColexSubsets::iterator& ColexSubsets::iterator::operator++() {
  ++rank_;
  if (rank_ < last_) next_colex_subset(current_, universe_);
  return *this;
}

ColexSubsets::iterator ColexSubsets::begin() const {
  return iterator(universe_, k_, first_, last_, true);
}

ColexSubsets::iterator ColexSubsets::end() const {
  return iterator(universe_, k_, last_, last_, false);
}

BigRational rational_pow(const BigRational& q, std::uint64_t exponent) {
  using boost::multiprecision::pow;
  if (exponent > static_cast<std::uint64_t>(std::numeric_limits<unsigned>::max())) {
    throw OutOfRangeError("rational_pow: exponent too large");
  }
  const auto e = static_cast<unsigned>(exponent);
  BigInt num = pow(BigInt(numerator(q)), e);
  BigInt den = pow(BigInt(denominator(q)), e);
  return BigRational(num, den);
}

namespace {

// Mantissa/exponent split of a positive integer: value ~= top * 2^shift with
// top holding the leading 62 bits.
std::pair<double, std::int64_t> top_bits(const BigInt& x) {
  const auto bits = static_cast<std::int64_t>(msb(x));
  const std::int64_t shift = std::max<std::int64_t>(0, bits - 62);
  const double top = static_cast<double>(shift > 0 ? BigInt(x >> shift) : x);
  return {top, shift};
}

}  // namespace

double to_double(const BigRational& q) {
  if (q == 0) return 0.0;
  const bool negative = q < 0;
  const BigInt num = negative ? BigInt(-numerator(q)) : BigInt(numerator(q));
  const BigInt den = denominator(q);
  const auto [ntop, nshift] = top_bits(num);
  const auto [dtop, dshift] = top_bits(den);
  const double magnitude = std::ldexp(ntop / dtop, static_cast<int>(nshift - dshift));
  return negative ? -magnitude : magnitude;
}

double log10_of(const BigRational& q) {
  if (q <= 0) throw OutOfRangeError("log10_of: argument must be positive");
  const auto log10_int = [](const BigInt& x) {
    const auto [top, shift] = top_bits(x);
    return std::log10(top) + static_cast<double>(shift) * std::log10(2.0);
  };
  return log10_int(numerator(q)) - log10_int(denominator(q));
}

std::string decimal_string(const BigRational& q, int digits) {
  if (digits < 0) throw OutOfRangeError("decimal_string: digits must be nonnegative");
  const bool negative = q < 0;
  BigInt num = negative ? BigInt(-numerator(q)) : BigInt(numerator(q));
  const BigInt den = denominator(q);
  using boost::multiprecision::pow;
  const BigInt scaled = num * pow(BigInt(10), static_cast<unsigned>(digits)) / den;
  std::string body = scaled.str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<std::size_t>(digits + 1) - body.size(), '0');
  }
  std::string result = negative ? "-" : "";
  result += body.substr(0, body.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    result += '.';
    result += body.substr(body.size() - static_cast<std::size_t>(digits));
  }
  return result;
}

}  // namespace berge
