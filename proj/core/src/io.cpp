#include "berge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace berge::io {
namespace {

// Splits text into lines; a trailing newline is required so that truncated
// files are rejected rather than silently accepted.
std::vector<std::string_view> lines_of(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    throw ParseError("file must end with a newline");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Int>
Int parse_int(std::string_view token, const char* what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("malformed ") + what + ": '" + std::string(token) + "'");
  }
  return value;
}

// Parses "name=<int>" with the exact expected name.
template <typename Int>
Int parse_field(std::string_view token, std::string_view name) {
  if (token.size() <= name.size() + 1 || token.substr(0, name.size()) != name ||
      token[name.size()] != '=') {
    throw ParseError("expected field '" + std::string(name) + "=', got '" + std::string(token) +
                     "'");
  }
  return parse_int<Int>(token.substr(name.size() + 1), "field value");
}

void expect_header(const std::vector<std::string_view>& tokens, std::string_view magic,
                   std::size_t field_count) {
  if (tokens.size() != 2 + field_count || tokens[0] != magic || tokens[1] != "v1") {
    throw ParseError("expected header '" + std::string(magic) + " v1 ...'");
  }
}

// Shared body reader for "<rank> <color>" tables.
std::vector<int> parse_rank_color_lines(const std::vector<std::string_view>& lines,
                                        std::size_t first_line, std::uint64_t count, int c) {
  if (lines.size() - first_line != count) {
    throw ParseError("expected " + std::to_string(count) + " record lines, got " +
                     std::to_string(lines.size() - first_line));
  }
  std::vector<int> colors(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto tokens = tokens_of(lines[first_line + i]);
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(first_line + i + 1) +
                       ": expected '<rank> <color>'");
    }
    const auto rank = parse_int<std::uint64_t>(tokens[0], "rank");
    if (rank != i) {
      throw ParseError("line " + std::to_string(first_line + i + 1) +
                       ": ranks must be complete and ascending");
    }
    const int color = parse_int<int>(tokens[1], "color");
    if (color < 0 || color >= c) {
      throw ParseError("line " + std::to_string(first_line + i + 1) + ": color outside [0, c)");
    }
    colors[i] = color;
  }
  return colors;
}

void append_rank_color_lines(std::ostringstream& out, std::span<const int> colors) {
  for (std::size_t i = 0; i < colors.size(); ++i) {
    out << i << ' ' << colors[i] << '\n';
  }
}

}  // namespace

std::string serialize(const ForbiddenTable& table) {
  std::ostringstream out;
  out << "berge-forbidden v1 N=" << table.N() << " c=" << table.c() << '\n';
  append_rank_color_lines(out, table.colors());
  return out.str();
}

ForbiddenTable parse_forbidden(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty forbidden table");
  const auto header = tokens_of(lines[0]);
  expect_header(header, "berge-forbidden", 2);
  const int N = parse_field<int>(header[2], "N");
  const int c = parse_field<int>(header[3], "c");
  if (N < 0 || N > kMaxVertices) throw ParseError("N outside [0, 64]");
  if (c < 1) throw ParseError("c must be >= 1");
  return ForbiddenTable(N, c, parse_rank_color_lines(lines, 1, binomial_u64(N, 2), c));
}

std::string serialize(const CompleteColoring& coloring) {
  std::ostringstream out;
  out << "berge-coloring v1 N=" << coloring.N() << " r=" << coloring.r()
      << " c=" << coloring.c() << '\n';
  append_rank_color_lines(out, coloring.colors());
  return out.str();
}

CompleteColoring parse_coloring(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty coloring");
  const auto header = tokens_of(lines[0]);
  expect_header(header, "berge-coloring", 3);
  const int N = parse_field<int>(header[2], "N");
  const int r = parse_field<int>(header[3], "r");
  const int c = parse_field<int>(header[4], "c");
  if (N < 0 || N > kMaxVertices) throw ParseError("N outside [0, 64]");
  if (r < 1) throw ParseError("r must be >= 1");
  if (c < 1) throw ParseError("c must be >= 1");
  if (binomial_u64(N, r) > kMaxDenseTable) throw ParseError("coloring exceeds supported size");
  return CompleteColoring(N, r, c, parse_rank_color_lines(lines, 1, binomial_u64(N, r), c));
}

std::string serialize(const Hypergraph& hypergraph) {
  std::ostringstream out;
  out << "berge-hypergraph v1 N=" << hypergraph.vertex_count << " m=" << hypergraph.edges.size()
      << '\n';
  for (const auto& edge : hypergraph.edges) {
    for (std::size_t i = 0; i < edge.vertices.size(); ++i) {
      if (i > 0) out << ' ';
      out << edge.vertices[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("empty hypergraph");
  const auto header = tokens_of(lines[0]);
  expect_header(header, "berge-hypergraph", 2);
  Hypergraph h;
  h.vertex_count = parse_field<int>(header[2], "N");
  const auto m = parse_field<std::uint64_t>(header[3], "m");
  if (h.vertex_count < 0 || h.vertex_count > kMaxVertices) throw ParseError("N outside [0, 64]");
  if (lines.size() - 1 != m) {
    throw ParseError("expected " + std::to_string(m) + " edge lines");
  }
  bool uniform = true;
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto tokens = tokens_of(lines[1 + i]);
    if (tokens.empty()) throw ParseError("line " + std::to_string(i + 2) + ": empty edge");
    HyperEdge edge;
    edge.vertices.reserve(tokens.size());
    for (const auto& token : tokens) {
      const int v = parse_int<int>(token, "vertex");
      if (v < 0 || v >= h.vertex_count) {
        throw ParseError("line " + std::to_string(i + 2) + ": vertex outside [0, N)");
      }
      if (!edge.vertices.empty() && v <= edge.vertices.back()) {
        throw ParseError("line " + std::to_string(i + 2) + ": vertices must strictly increase");
      }
      edge.vertices.push_back(v);
    }
    if (!h.edges.empty() && edge.vertices.size() != h.edges.front().vertices.size()) {
      uniform = false;
    }
    h.edges.push_back(std::move(edge));
  }
  if (uniform && !h.edges.empty()) {
    h.uniform_rank = static_cast<int>(h.edges.front().vertices.size());
  }
  const ValidationReport report = validate(h);
  if (!report.ok) throw ParseError("invalid hypergraph: " + report.violation);
  return h;
}

std::string serialize(const Certificate& certificate) {
  std::ostringstream out;
  out << "berge-certificate v1 N=" << certificate.forbidden.N()
      << " c=" << certificate.forbidden.c() << " n=" << certificate.n << '\n';
  out << "compatible " << certificate.compatible << '\n';
  out << "expectation " << numerator(certificate.initial_expectation) << '/'
      << denominator(certificate.initial_expectation) << '\n';
  append_rank_color_lines(out, certificate.forbidden.colors());
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.size() < 3) throw ParseError("certificate too short");
  const auto header = tokens_of(lines[0]);
  expect_header(header, "berge-certificate", 3);
  const int N = parse_field<int>(header[2], "N");
  const int c = parse_field<int>(header[3], "c");
  const int n = parse_field<int>(header[4], "n");
  if (N < 0 || N > kMaxVertices) throw ParseError("N outside [0, 64]");
  if (c < 1) throw ParseError("c must be >= 1");

  const auto compat_tokens = tokens_of(lines[1]);
  if (compat_tokens.size() != 2 || compat_tokens[0] != "compatible") {
    throw ParseError("expected 'compatible <count>'");
  }
  const auto compatible = parse_int<std::uint64_t>(compat_tokens[1], "compatible count");

  const auto expect_tokens = tokens_of(lines[2]);
  if (expect_tokens.size() != 2 || expect_tokens[0] != "expectation") {
    throw ParseError("expected 'expectation <num>/<den>'");
  }
  const std::string_view fraction = expect_tokens[1];
  const std::size_t slash = fraction.find('/');
  if (slash == std::string_view::npos) throw ParseError("expectation must be '<num>/<den>'");
  const auto check_digits = [](std::string_view s) {
    if (s.empty()) throw ParseError("malformed expectation");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '-' && i == 0 && s.size() > 1) continue;
      if (s[i] < '0' || s[i] > '9') throw ParseError("malformed expectation");
    }
  };
  const std::string num(fraction.substr(0, slash));
  const std::string den(fraction.substr(slash + 1));
  check_digits(num);
  check_digits(den);
  if (den.empty() || den == "0") throw ParseError("expectation denominator must be nonzero");

  Certificate certificate{
      ForbiddenTable(N, c, parse_rank_color_lines(lines, 3, binomial_u64(N, 2), c)), n,
      compatible, BigRational(BigInt(num), BigInt(den))};
  return certificate;
}

void RunReport::set(std::string_view key, std::string_view value) {
  if (key.empty() || key.find_first_of(" =\n") != std::string_view::npos) {
    throw OutOfRangeError("RunReport: keys must be nonempty without spaces, '=', or newlines");
  }
  if (value.find('\n') != std::string_view::npos) {
    throw OutOfRangeError("RunReport: values must be single-line");
  }
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::string(value);
      return;
    }
  }
  entries_.emplace_back(std::string(key), std::string(value));
}

void RunReport::set(std::string_view key, std::int64_t value) {
  set(key, std::string_view(std::to_string(value)));
}

void RunReport::set(std::string_view key, std::uint64_t value) {
  set(key, std::string_view(std::to_string(value)));
}

const std::string* RunReport::find(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string RunReport::serialize() const {
  std::ostringstream out;
  out << "berge-report v1\n";
  for (const auto& [k, v] : entries_) {
    out << k << " = " << v << '\n';
  }
  return out.str();
}

RunReport RunReport::parse(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != "berge-report v1") {
    throw ParseError("expected header 'berge-report v1'");
  }
  RunReport report;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const std::size_t sep = line.find(" = ");
    if (sep == std::string_view::npos || sep == 0) {
      throw ParseError("line " + std::to_string(i + 1) + ": expected 'key = value'");
    }
    report.set(line.substr(0, sep), line.substr(sep + 3));
  }
  return report;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
  if (!out) throw Error("failed writing file: " + path.string());
}

}  // namespace berge::io
