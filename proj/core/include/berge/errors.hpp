#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace berge {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A subset or vertex list that was required to be strictly increasing is not.
struct NotSortedError : Error {
  using Error::Error;
};

// A rank, vertex, or parameter lies outside its admissible range.
struct OutOfRangeError : Error {
  using Error::Error;
};

// A color index is not in [0, c).
struct BadColorError : Error {
  using Error::Error;
};

// The request would materialize a table or search beyond the supported size.
struct TooLargeError : Error {
  using Error::Error;
};

// Every color of some hyperedge is forbidden by one of its vertex pairs.
struct NoAllowedColorError : Error {
  NoAllowedColorError(std::uint64_t edge_rank, const std::string& what)
      : Error(what), edge_rank(edge_rank) {}
  std::uint64_t edge_rank;
};

// A Monte Carlo estimate was requested with zero trials.
struct ZeroTrialsError : Error {
  using Error::Error;
};

// A threshold scan has no nontrivial answer for these parameters.
struct DegenerateError : Error {
  using Error::Error;
};

// The operation is only defined for uniformity r >= 3.
struct RNotSupportedError : Error {
  using Error::Error;
};

// An exhaustive search would exceed its nominal leaf budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

// A serialized object does not conform to its file format.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace berge
