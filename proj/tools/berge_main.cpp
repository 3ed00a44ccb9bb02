#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "berge/berge.hpp"
#include "berge/bounds.hpp"
#include "berge/construct.hpp"
#include "berge/hedgehog.hpp"
#include "berge/io.hpp"
#include "berge/search.hpp"
#include "berge/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWitness = 3;
constexpr int kExitBudget = 4;

using Clock = std::chrono::steady_clock;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

std::string format_rational(const berge::BigRational& q) {
  std::ostringstream out;
  out << numerator(q) << '/' << denominator(q);
  return out.str();
}

std::string format_core(const std::vector<berge::Vertex>& core) {
  std::ostringstream out;
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (i > 0) out << ' ';
    out << core[i];
  }
  return out.str();
}

std::string format_assignment(const berge::BergeWitness& witness) {
  std::ostringstream out;
  for (std::size_t i = 0; i < witness.assignment.size(); ++i) {
    const auto& entry = witness.assignment[i];
    if (i > 0) out << "; ";
    out << entry.u << ',' << entry.v << "->";
    for (std::size_t j = 0; j < entry.edge.vertices.size(); ++j) {
      if (j > 0) out << ',';
      out << entry.edge.vertices[j];
    }
  }
  return out.str();
}

berge::ColoringPolicy parse_policy(const std::string& text) {
  if (text.empty() || text == "least") return berge::LeastAllowed{};
  if (text.rfind("random:", 0) == 0) {
    return berge::RandomAllowed{std::stoull(text.substr(7))};
  }
  if (text.rfind("perm:", 0) == 0) {
    berge::FixedPreference pref;
    std::string body = text.substr(5);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string item =
          body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty()) throw CLI::ValidationError("--policy", "empty entry in permutation");
      pref.order.push_back(std::stoi(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return pref;
  }
  throw CLI::ValidationError("--policy", "expected 'least', 'random:<seed>', or 'perm:a,b,...'");
}

void finish_report(berge::io::RunReport& report, const Clock::time_point& started,
                   const std::string& report_path) {
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
  report.set("wall_ms", static_cast<std::int64_t>(elapsed.count()));
  const std::string text = report.serialize();
  std::cout << text;
  if (!report_path.empty()) berge::io::write_file(report_path, text);
}

struct BoundArgs {
  int r = 0;
  int n = 0;
  std::optional<int> c;
  std::optional<int> N;
  std::string report_path;
};

int run_bound(const BoundArgs& args) {
  const auto started = Clock::now();
  berge::io::RunReport report;
  report.set("command", "bound");
  report.set("version", berge::kVersion);
  const berge::BoundReport bounds = berge::bound_report(args.r, args.n, args.c);
  report.set("r", static_cast<std::int64_t>(bounds.r));
  report.set("n", static_cast<std::int64_t>(bounds.n));
  report.set("c", static_cast<std::int64_t>(bounds.c));
  if (bounds.threshold) {
    report.set("threshold", static_cast<std::int64_t>(*bounds.threshold));
    report.set("expectation", format_rational(*bounds.expectation));
    report.set("expectation_decimal", berge::decimal_string(*bounds.expectation, 6));
  } else {
    report.set("threshold", "degenerate");
  }
  report.set("guarantee", format_rational(bounds.guarantee));
  report.set("guarantee_decimal", berge::decimal_string(bounds.guarantee, 6));
  report.set("sufficiency", bounds.sufficiency ? "true" : "false");
  if (args.N) {
    const berge::BigRational at_N = berge::expected_mono_upper(*args.N, args.n, bounds.c);
    report.set("N", static_cast<std::int64_t>(*args.N));
    report.set("expectation_at_N", format_rational(at_N));
    report.set("expectation_at_N_decimal", berge::decimal_string(at_N, 6));
  }
  finish_report(report, started, args.report_path);
  return kExitOk;
}

struct ConstructArgs {
  int N = 0;
  int n = 0;
  int r = 0;
  int c = 0;
  std::uint64_t seed = 0;
  bool derandomize = false;
  bool verify = false;
  std::string policy = "least";
  std::string forbidden_path = "forbidden.tbl";
  std::string coloring_path = "coloring.col";
  std::string certificate_path = "certificate.crt";
  std::string report_path;
  int workers = 1;
};

int run_construct(const ConstructArgs& args) {
  const auto started = Clock::now();
  berge::io::RunReport report;
  report.set("command", "construct");
  report.set("version", berge::kVersion);
  report.set("N", static_cast<std::int64_t>(args.N));
  report.set("n", static_cast<std::int64_t>(args.n));
  report.set("r", static_cast<std::int64_t>(args.r));
  report.set("c", static_cast<std::int64_t>(args.c));

  std::optional<berge::ForbiddenTable> forbidden;
  std::optional<berge::CompleteColoring> coloring;
  if (args.c == 1) {
    // A single color cannot avoid the forbidden color of any pair, so the
    // pair rule is inapplicable; the unique 1-coloring is emitted instead.
    report.set("mode", args.derandomize ? "derandomized" : "random");
    report.set("note", "c=1: pair rule inapplicable, emitting the unique coloring");
    if (!args.derandomize) report.set("seed", args.seed);
    forbidden = berge::ForbiddenTable(args.N, 1);
    coloring = berge::CompleteColoring::constant(args.N, args.r, 1, 0);
  } else if (args.derandomize) {
    report.set("mode", "derandomized");
    berge::Certificate certificate = berge::derandomize_forbidden(args.N, args.n, args.c);
    report.set("compatible", certificate.compatible);
    report.set("expectation", format_rational(certificate.initial_expectation));
    report.set("expectation_decimal", berge::decimal_string(certificate.initial_expectation, 6));
    berge::io::write_file(args.certificate_path, berge::io::serialize(certificate));
    report.set("certificate_file", args.certificate_path);
    forbidden = std::move(certificate.forbidden);
    coloring = berge::respecting_coloring(*forbidden, args.r, parse_policy(args.policy));
  } else {
    report.set("mode", "random");
    report.set("seed", args.seed);
    forbidden = berge::random_forbidden(args.N, args.c, args.seed);
    coloring = berge::respecting_coloring(*forbidden, args.r, parse_policy(args.policy));
  }
  report.set("policy", args.policy.empty() ? "least" : args.policy);

  berge::io::write_file(args.forbidden_path, berge::io::serialize(*forbidden));
  report.set("forbidden_file", args.forbidden_path);
  berge::io::write_file(args.coloring_path, berge::io::serialize(*coloring));
  report.set("coloring_file", args.coloring_path);

  int exit_code = kExitOk;
  if (args.verify) {
    const auto witness = berge::find_mono_berge_clique(*coloring, args.n, args.workers);
    report.set("verify", "true");
    report.set("witness_found", witness ? "true" : "false");
    if (witness) {
      report.set("witness_color", static_cast<std::int64_t>(*witness->color));
      report.set("witness_core", format_core(witness->core));
      report.set("witness_assignment", format_assignment(*witness));
      exit_code = kExitWitness;
    }
  }
  finish_report(report, started, args.report_path);
  return exit_code;
}

struct SearchArgs {
  int r = 0;
  int c = 0;
  int n = 0;
  std::optional<int> N;
  std::optional<int> nmax;
  std::optional<std::uint64_t> budget;
  bool no_fix_first = false;
  bool canonical_vertices = false;
  std::string counterexample_path;
  std::string report_path;
};

int run_search(const SearchArgs& args) {
  const auto started = Clock::now();
  if (!args.N && !args.nmax) {
    throw CLI::RequiredError("--N or --nmax");
  }
  berge::SearchOptions options;
  if (args.budget) {
    options.max_nominal_leaves = *args.budget;
  } else if (const char* env = std::getenv("BERGE_BUDGET")) {
    try {
      options.max_nominal_leaves = std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("BERGE_BUDGET", "must be an unsigned integer");
    }
  }
  options.fix_first_edge_color = !args.no_fix_first;
  options.vertex_canonization = args.canonical_vertices;

  berge::io::RunReport report;
  report.set("command", "search");
  report.set("version", berge::kVersion);
  report.set("r", static_cast<std::int64_t>(args.r));
  report.set("c", static_cast<std::int64_t>(args.c));
  report.set("n", static_cast<std::int64_t>(args.n));
  report.set("budget", options.max_nominal_leaves);

  if (args.N) {
    report.set("mode", "decide");
    report.set("N", static_cast<std::int64_t>(*args.N));
    const berge::SearchOutcome outcome = berge::ramsey_decide(args.r, args.c, args.n, *args.N, options);
    report.set("arrows", outcome.arrows ? "true" : "false");
    report.set("explored", outcome.explored);
    if (!outcome.arrows && !args.counterexample_path.empty()) {
      berge::io::write_file(args.counterexample_path, berge::io::serialize(*outcome.counterexample));
      report.set("counterexample_file", args.counterexample_path);
    }
  } else {
    report.set("mode", "scan");
    report.set("nmax", static_cast<std::int64_t>(*args.nmax));
    const berge::RamseyScan scan = berge::ramsey_number_exact(args.r, args.c, args.n, *args.nmax, options);
    report.set("found", scan.value ? "true" : "false");
    if (scan.value) report.set("value", static_cast<std::int64_t>(*scan.value));
    report.set("searched_max", static_cast<std::int64_t>(scan.searched_max));
    report.set("explored", scan.explored);
  }
  finish_report(report, started, args.report_path);
  return kExitOk;
}

struct HedgehogArgs {
  int n = 0;
  std::string out_path;
  std::string report_path;
};

int run_hedgehog(const HedgehogArgs& args) {
  const auto started = Clock::now();
  berge::io::RunReport report;
  report.set("command", "hedgehog");
  report.set("version", berge::kVersion);
  report.set("n", static_cast<std::int64_t>(args.n));
  const berge::Hedgehog hedgehog = berge::build_hedgehog(args.n);
  report.set("vertices", static_cast<std::int64_t>(hedgehog.hypergraph.vertex_count));
  report.set("edges", static_cast<std::uint64_t>(hedgehog.hypergraph.edges.size()));
  const auto embedding = berge::is_berge_clique(hedgehog);
  report.set("berge_clique", embedding ? "true" : "false");
  if (!args.out_path.empty()) {
    berge::io::write_file(args.out_path, berge::io::serialize(hedgehog.hypergraph));
    report.set("out_file", args.out_path);
  }
  finish_report(report, started, args.report_path);
  return embedding ? kExitOk : kExitFailure;
}

struct MonteCarloArgs {
  int N = 0;
  int n = 0;
  int r = 0;
  int c = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string policy = "least";
  std::string report_path;
  int workers = 1;
};

int run_montecarlo(const MonteCarloArgs& args) {
  const auto started = Clock::now();
  berge::io::RunReport report;
  report.set("command", "montecarlo");
  report.set("version", berge::kVersion);
  report.set("N", static_cast<std::int64_t>(args.N));
  report.set("n", static_cast<std::int64_t>(args.n));
  report.set("r", static_cast<std::int64_t>(args.r));
  report.set("c", static_cast<std::int64_t>(args.c));
  report.set("trials", args.trials);
  report.set("seed", args.seed);
  report.set("policy", args.policy);
  const berge::MonoEstimate estimate = berge::estimate_mono_probability(
      args.N, args.n, args.r, args.c, args.trials, args.seed, parse_policy(args.policy),
      args.workers);
  report.set("hits", estimate.hits);
  report.set("infeasible", estimate.infeasible);
  report.set("fraction", format_double(estimate.fraction));
  report.set("wilson_low", format_double(estimate.wilson_low));
  report.set("wilson_high", format_double(estimate.wilson_high));
  finish_report(report, started, args.report_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge-Ramsey lower-bound constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", berge::kVersion);

  int workers = 1;
  app.add_option("--workers", workers, "Worker threads for partitionable scans")
      ->check(CLI::PositiveNumber);

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Probabilistic lower-bound summary");
  bound->add_option("--r", bound_args.r, "Uniformity")->required();
  bound->add_option("--n", bound_args.n, "Clique order")->required();
  bound->add_option("--c", bound_args.c, "Colors (default C(r,2)+1)");
  bound->add_option("--N", bound_args.N, "Also evaluate the expectation at this N");
  bound->add_option("--report", bound_args.report_path, "Write the report to this file");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a rule-respecting coloring");
  construct->add_option("--N", construct_args.N, "Host vertices")->required();
  construct->add_option("--n", construct_args.n, "Clique order")->required();
  construct->add_option("--r", construct_args.r, "Uniformity")->required();
  construct->add_option("--c", construct_args.c, "Colors")->required();
  construct->add_option("--seed", construct_args.seed, "Seed for the random forbidden table");
  construct->add_flag("--derandomize", construct_args.derandomize,
                      "Derandomize the forbidden table (method of conditional expectations)");
  construct->add_flag("--verify", construct_args.verify,
                      "Scan the coloring for a monochromatic Berge clique");
  construct->add_option("--policy", construct_args.policy,
                        "Color policy: least | random:<seed> | perm:a,b,...");
  construct->add_option("--forbidden-out", construct_args.forbidden_path,
                        "Forbidden table output path");
  construct->add_option("--coloring-out", construct_args.coloring_path, "Coloring output path");
  construct->add_option("--certificate-out", construct_args.certificate_path,
                        "Certificate output path (with --derandomize)");
  construct->add_option("--report", construct_args.report_path, "Write the report to this file");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exact Berge-Ramsey search");
  search->add_option("--r", search_args.r, "Uniformity")->required();
  search->add_option("--c", search_args.c, "Colors")->required();
  search->add_option("--n", search_args.n, "Clique order")->required();
  search->add_option("--N", search_args.N, "Decide arrowing at this single N");
  search->add_option("--nmax", search_args.nmax, "Scan N = n..nmax for the least arrowing N");
  search->add_option("--budget", search_args.budget,
                     "Nominal leaf budget (overrides BERGE_BUDGET)");
  search->add_flag("--no-fix-first", search_args.no_fix_first,
                   "Do not fix the first edge color to 0");
  search->add_flag("--canonical-vertices", search_args.canonical_vertices,
                   "Reject vertex-relabeling-reducible colorings (N <= 8)");
  search->add_option("--counterexample-out", search_args.counterexample_path,
                     "Write a witness-free coloring here when arrowing fails");
  search->add_option("--report", search_args.report_path, "Write the report to this file");

  HedgehogArgs hedgehog_args;
  auto* hedgehog = app.add_subcommand("hedgehog", "Build a hedgehog hypergraph");
  hedgehog->add_option("--n", hedgehog_args.n, "Body size")->required();
  hedgehog->add_option("--out", hedgehog_args.out_path, "Hypergraph output path");
  hedgehog->add_option("--report", hedgehog_args.report_path, "Write the report to this file");

  MonteCarloArgs montecarlo_args;
  auto* montecarlo = app.add_subcommand("montecarlo", "Estimate the failure probability");
  montecarlo->add_option("--N", montecarlo_args.N, "Host vertices")->required();
  montecarlo->add_option("--n", montecarlo_args.n, "Clique order")->required();
  montecarlo->add_option("--r", montecarlo_args.r, "Uniformity")->required();
  montecarlo->add_option("--c", montecarlo_args.c, "Colors")->required();
  montecarlo->add_option("--trials", montecarlo_args.trials, "Number of trials")->required();
  montecarlo->add_option("--seed", montecarlo_args.seed, "Base seed");
  montecarlo->add_option("--policy", montecarlo_args.policy,
                         "Color policy: least | random:<seed> | perm:a,b,...");
  montecarlo->add_option("--report", montecarlo_args.report_path,
                         "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    construct_args.workers = workers;
    montecarlo_args.workers = workers;
    if (bound->parsed()) return run_bound(bound_args);
    if (construct->parsed()) return run_construct(construct_args);
    if (search->parsed()) return run_search(search_args);
    if (hedgehog->parsed()) return run_hedgehog(hedgehog_args);
    if (montecarlo->parsed()) return run_montecarlo(montecarlo_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const berge::TooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const berge::ZeroTrialsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::RNotSupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::OutOfRangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::BadColorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::NotSortedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const berge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
