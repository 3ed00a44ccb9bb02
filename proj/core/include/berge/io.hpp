#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/construct.hpp"
#include "berge/hypergraph.hpp"

namespace berge::io {

// Text formats, each a single header line followed by one record per line:
//   berge-forbidden v1 N=<N> c=<c>        <pair rank> <color>, complete, ascending
//   berge-coloring v1 N=<N> r=<r> c=<c>   <edge rank> <color>, complete, ascending
//   berge-hypergraph v1 N=<N> m=<m>       <v0> <v1> ..., strictly increasing
//   berge-certificate v1 N=<N> c=<c> n=<n>
//       compatible <count> / expectation <num>/<den>, then the table lines
// Serialization is canonical, so write -> read -> write is bit-identical.

std::string serialize(const ForbiddenTable& table);
ForbiddenTable parse_forbidden(std::string_view text);

std::string serialize(const CompleteColoring& coloring);
CompleteColoring parse_coloring(std::string_view text);

std::string serialize(const Hypergraph& hypergraph);
Hypergraph parse_hypergraph(std::string_view text);

std::string serialize(const Certificate& certificate);
Certificate parse_certificate(std::string_view text);

// Ordered key/value block rendered as "berge-report v1" plus "key = value"
// lines; parse(serialize(r)) is lossless for single-line values.
class RunReport {
 public:
  void set(std::string_view key, std::string_view value);
  void set(std::string_view key, std::int64_t value);
  void set(std::string_view key, std::uint64_t value);
  const std::string* find(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string serialize() const;
  static RunReport parse(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace berge::io
