#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using Vertex = int;

// Hard cap on host vertex counts: every r-subset of [0, 64) fits in a 64-bit
// mask, and C(64, 32) still fits in uint64_t.
inline constexpr int kMaxVertices = 64;

// Dense per-edge tables (one entry per r-subset) are refused beyond this many
// entries rather than attempting a multi-gigabyte allocation.
inline constexpr std::uint64_t kMaxDenseTable = std::uint64_t{1} << 28;

// Exact binomial coefficient; zero when k < 0 or k > n.  n must be >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Table-backed binomial for n <= 64 (the largest such value, C(64, 32), fits
// in uint64_t).  Throws OutOfRangeError for n outside [0, 64].
std::uint64_t binomial_u64(int n, int k);

// Rank of a k-subset in the colexicographic order of all k-subsets of the
// nonnegative integers: rank = sum_i C(subset[i], i + 1).  The rank does not
// depend on any ambient universe size.  Elements must be strictly increasing
// and nonnegative (NotSortedError otherwise), and the subset must satisfy
// subset.back() < 64 so the rank fits uint64_t (OutOfRangeError).
std::uint64_t colex_rank(std::span<const Vertex> subset);

// Inverse of colex_rank for subsets of size k.  rank must be < C(64, k).
std::vector<Vertex> colex_unrank(std::uint64_t rank, int k);

// A subset rank together with the universe it was validated against.
struct SubsetRank {
  std::uint64_t value = 0;
  int k = 0;
  int universe = 0;
};

// As colex_rank, additionally checking subset.back() < universe.
SubsetRank colex_rank_in(std::span<const Vertex> subset, int universe);

// Inverse of colex_rank_in; throws OutOfRangeError when
// rank.value >= C(rank.universe, rank.k).
std::vector<Vertex> colex_unrank(const SubsetRank& rank);

// Colex rank of the pair {u, v}: u + C(v, 2).  Requires 0 <= u < v.
std::uint64_t pair_rank(Vertex u, Vertex v);

// In-place colex successor of a strictly increasing subset.  Returns false
// (leaving the contents unspecified) when the input was the last k-subset of
// [0, universe).
bool next_colex_subset(std::span<Vertex> subset, int universe);

// The k-subsets of [0, universe) in colexicographic order, optionally
// restricted to a half-open rank window [first, last).  Iteration yields each
// subset as a sorted vector alongside its running rank, so streams can be
// restarted from an arbitrary rank (used to partition scans across workers).
class ColexSubsets {
 public:
  ColexSubsets(int universe, int k);
  ColexSubsets(int universe, int k, std::uint64_t first, std::uint64_t last);

  std::uint64_t size() const { return last_ - first_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<Vertex>;
    using difference_type = std::ptrdiff_t;

    const std::vector<Vertex>& operator*() const { return current_; }
    const std::vector<Vertex>* operator->() const { return &current_; }
    std::uint64_t rank() const { return rank_; }

    iterator& operator++();
    bool operator==(const iterator& other) const { return rank_ == other.rank_; }
    bool operator!=(const iterator& other) const { return rank_ != other.rank_; }

   private:
    friend class ColexSubsets;
    iterator(int universe, int k, std::uint64_t rank, std::uint64_t last, bool materialize);

    std::vector<Vertex> current_;
    std::uint64_t rank_ = 0;
    std::uint64_t last_ = 0;
    int universe_ = 0;
  };

  iterator begin() const;
  iterator end() const;

 private:
  int universe_;
  int k_;
  std::uint64_t first_;
  std::uint64_t last_;
};

// q raised to a nonnegative integer power, exactly.
BigRational rational_pow(const BigRational& q, std::uint64_t exponent);

// Nearest-double approximation; values beyond double range become +/-inf or 0.
double to_double(const BigRational& q);

// log10 of a positive rational, as a double.  Throws OutOfRangeError on q <= 0.
double log10_of(const BigRational& q);

// Decimal expansion with the given number of fractional digits, truncated
// toward zero, e.g. decimal_string(27/16, 4) == "1.6875".
std::string decimal_string(const BigRational& q, int digits);

}  // namespace berge
