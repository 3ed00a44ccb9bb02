#include "berge/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <sstream>

#include "berge/berge.hpp"

namespace berge {
namespace {

// Counter-based generator: word k of the stream keyed by (seed, stream) is a
// triple splitmix64-style mix, so any word can be produced independently of
// the others (colorings stay reproducible under parallel generation).
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

std::uint64_t keyed_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ull);
  h = mix64(h ^ ((stream + 1) * 0xD1B54A32D192ED03ull));
  return mix64(h + k * 0x2545F4914F6CDD1Dull);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return keyed_word(seed, index, 0);
}

// Uniform draw from [0, bound) by rejection: accept words in [t, 2^64) whose
// count is an exact multiple of bound, so every residue is equally likely.
template <typename NextWord>
std::uint64_t uniform_below(std::uint64_t bound, NextWord&& next) {
  const std::uint64_t t = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t w = next();
    if (w >= t) return w % bound;
  }
}

}  // namespace

ForbiddenTable random_forbidden(int N, int c, std::uint64_t seed) {
  if (N < 2 || N > kMaxVertices) throw OutOfRangeError("random_forbidden: N must be in [2, 64]");
  if (c < 1) throw OutOfRangeError("random_forbidden: c must be >= 1");
  const std::uint64_t pairs = binomial_u64(N, 2);
  std::vector<int> colors(pairs);
  for (std::uint64_t rank = 0; rank < pairs; ++rank) {
    std::uint64_t k = 0;
    colors[rank] = static_cast<int>(uniform_below(
        static_cast<std::uint64_t>(c), [&] { return keyed_word(seed, rank, k++); }));
  }
  return ForbiddenTable(N, c, std::move(colors));
}

namespace {

// Tracks which colors of the current edge are forbidden, with O(touched)
// reset between edges.
struct BlockedSet {
  explicit BlockedSet(int c) : marks(static_cast<std::size_t>(c)) {}

  void block(int color) {
    if (!marks[static_cast<std::size_t>(color)]) {
      marks[static_cast<std::size_t>(color)] = 1;
      touched.push_back(color);
    }
  }
  bool blocked(int color) const { return marks[static_cast<std::size_t>(color)] != 0; }
  int distinct() const { return static_cast<int>(touched.size()); }
  void clear() {
    for (int color : touched) marks[static_cast<std::size_t>(color)] = 0;
    touched.clear();
  }

  std::vector<std::uint8_t> marks;
  std::vector<int> touched;
};

void require_valid_table(const ForbiddenTable& forbidden, const char* caller) {
  const ValidationReport report = validate(forbidden);
  if (!report.ok) {
    std::ostringstream msg;
    msg << caller << ": forbidden table invalid (" << report.violation << ")";
    throw OutOfRangeError(msg.str());
  }
}

}  // namespace

CompleteColoring respecting_coloring(const ForbiddenTable& forbidden, int r,
                                     const ColoringPolicy& policy) {
  const int N = forbidden.N();
  const int c = forbidden.c();
  if (r < 2 || r > N) throw OutOfRangeError("respecting_coloring: r must be in [2, N]");
  require_valid_table(forbidden, "respecting_coloring");
  if (const auto* pref = std::get_if<FixedPreference>(&policy)) {
    std::vector<char> seen(static_cast<std::size_t>(c), 0);
    if (static_cast<int>(pref->order.size()) != c) {
      throw BadColorError("respecting_coloring: preference order must list every color once");
    }
    for (int color : pref->order) {
      if (color < 0 || color >= c || seen[static_cast<std::size_t>(color)]) {
        throw BadColorError("respecting_coloring: preference order must be a permutation of [0, c)");
      }
      seen[static_cast<std::size_t>(color)] = 1;
    }
  }

  const std::uint64_t edge_total = binomial_u64(N, r);
  if (edge_total > kMaxDenseTable) {
    throw TooLargeError("respecting_coloring: coloring exceeds supported size");
  }
  std::vector<int> colors(edge_total);
  BlockedSet blocked(c);
  ColexSubsets edges(N, r);
  auto it = edges.begin();
  const auto stop = edges.end();
  for (; it != stop; ++it) {
    const auto& verts = *it;
    blocked.clear();
    for (std::size_t b = 1; b < verts.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        blocked.block(forbidden.color_at(pair_rank(verts[a], verts[b])));
      }
    }
    const int allowed = c - blocked.distinct();
    if (allowed == 0) {
      std::ostringstream msg;
      msg << "respecting_coloring: every color of edge " << to_string(HyperEdge{verts})
          << " is forbidden";
      throw NoAllowedColorError(it.rank(), msg.str());
    }
    int chosen = -1;
    if (std::holds_alternative<LeastAllowed>(policy)) {
      for (int color = 0; color < c; ++color) {
        if (!blocked.blocked(color)) {
          chosen = color;
          break;
        }
      }
    } else if (const auto* pref = std::get_if<FixedPreference>(&policy)) {
      for (int color : pref->order) {
        if (!blocked.blocked(color)) {
          chosen = color;
          break;
        }
      }
    } else {
      const auto& random = std::get<RandomAllowed>(policy);
      std::uint64_t k = 0;
      const std::uint64_t rank = it.rank();
      std::uint64_t pick = uniform_below(static_cast<std::uint64_t>(allowed), [&] {
        return keyed_word(random.seed, rank, k++);
      });
      for (int color = 0; color < c; ++color) {
        if (blocked.blocked(color)) continue;
        if (pick == 0) {
          chosen = color;
          break;
        }
        --pick;
      }
    }
    colors[it.rank()] = chosen;
  }
  return CompleteColoring(N, r, c, std::move(colors));
}

std::uint64_t compatible_count(const ForbiddenTable& forbidden, int n) {
  if (n < 2) throw OutOfRangeError("compatible_count: n must be >= 2");
  require_valid_table(forbidden, "compatible_count");
  const int N = forbidden.N();
  const int c = forbidden.c();
  if (n > N) return 0;
  if (binomial_u64(N, n) > kMaxDenseTable) {
    throw TooLargeError("compatible_count: too many cores to scan");
  }
  std::uint64_t count = 0;
  BlockedSet blocked(c);
  for (const auto& core : ColexSubsets(N, n)) {
    blocked.clear();
    for (std::size_t b = 1; b < core.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        blocked.block(forbidden.color_at(pair_rank(core[a], core[b])));
      }
    }
    count += static_cast<std::uint64_t>(c - blocked.distinct());
  }
  return count;
}

namespace {

// Per-core survival bits: alive(S, chi) while no fixed pair of S has been
// assigned forbidden color chi.
class AliveBits {
 public:
  AliveBits(std::uint64_t cores, int c)
      : words_per_core_((static_cast<std::uint64_t>(c) + 63) / 64),
        bits_(cores * words_per_core_, ~std::uint64_t{0}) {
    // Mask off the unused tail of each core's last word.
    const int tail = c % 64;
    if (tail != 0) {
      const std::uint64_t mask = (std::uint64_t{1} << tail) - 1;
      for (std::uint64_t s = 0; s < cores; ++s) {
        bits_[(s + 1) * words_per_core_ - 1] = mask;
      }
    }
  }

  bool alive(std::uint64_t core, int chi) const {
    return (bits_[core * words_per_core_ + static_cast<std::uint64_t>(chi) / 64] >>
            (static_cast<std::uint64_t>(chi) % 64)) & 1;
  }
  void kill(std::uint64_t core, int chi) {
    bits_[core * words_per_core_ + static_cast<std::uint64_t>(chi) / 64] &=
        ~(std::uint64_t{1} << (static_cast<std::uint64_t>(chi) % 64));
  }
  int alive_count(std::uint64_t core) const {
    int count = 0;
    for (std::uint64_t w = 0; w < words_per_core_; ++w) {
      count += std::popcount(bits_[core * words_per_core_ + w]);
    }
    return count;
  }

 private:
  std::uint64_t words_per_core_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace

Certificate derandomize_forbidden(int N, int n, int c, std::vector<BigRational>* trace) {
  if (N < 2 || N > kMaxVertices) throw OutOfRangeError("derandomize_forbidden: N must be in [2, 64]");
  if (n < 2) throw OutOfRangeError("derandomize_forbidden: n must be >= 2");
  if (c < 2) throw OutOfRangeError("derandomize_forbidden: c must be >= 2");
  const std::uint64_t cores = binomial_u64(N, n);
  if (cores > kMaxDenseTable) {
    throw TooLargeError("derandomize_forbidden: too many cores to track");
  }
  const std::uint64_t pairs = binomial_u64(N, 2);
  const int in_core_pairs = static_cast<int>(binomial_u64(n, 2));

  // All potentials are scaled by c^C(n, 2) so the bookkeeping stays integral:
  // a core with u unfixed pairs and alive color chi contributes
  // weight[u] = (c - 1)^u * c^(C(n,2) - u).
  using boost::multiprecision::pow;
  const BigInt scale = pow(BigInt(c), static_cast<unsigned>(in_core_pairs));
  std::vector<BigInt> weight(static_cast<std::size_t>(in_core_pairs) + 1);
  for (int u = 0; u <= in_core_pairs; ++u) {
    weight[static_cast<std::size_t>(u)] =
        pow(BigInt(c - 1), static_cast<unsigned>(u)) *
        pow(BigInt(c), static_cast<unsigned>(in_core_pairs - u));
  }

  std::vector<std::uint16_t> unfixed(cores, static_cast<std::uint16_t>(in_core_pairs));
  AliveBits alive(cores, c);
  BigInt phi = BigInt(cores) * c * weight[static_cast<std::size_t>(in_core_pairs)];
  const BigRational initial_expectation = cores == 0 ? BigRational(0) : BigRational(phi, scale);
  if (trace) {
    trace->clear();
    trace->push_back(initial_expectation);
  }

  std::vector<int> colors(pairs, 0);
  std::vector<std::uint64_t> touching;  // ranks of cores containing the pair being fixed
  std::vector<BigInt> gain(static_cast<std::size_t>(c));
  std::vector<Vertex> others;
  std::vector<Vertex> core_scratch;
  others.reserve(static_cast<std::size_t>(std::max(N - 2, 0)));

  ColexSubsets pair_stream(N, 2);
  for (auto pit = pair_stream.begin(); pit != pair_stream.end(); ++pit) {
    const Vertex a = (*pit)[0];
    const Vertex b = (*pit)[1];

    touching.clear();
    if (n <= N) {
      others.clear();
      for (Vertex v = 0; v < N; ++v) {
        if (v != a && v != b) others.push_back(v);
      }
      for (const auto& rest : ColexSubsets(N - 2, n - 2)) {
        core_scratch.clear();
        for (Vertex idx : rest) core_scratch.push_back(others[static_cast<std::size_t>(idx)]);
        core_scratch.push_back(a);
        core_scratch.push_back(b);
        std::sort(core_scratch.begin(), core_scratch.end());
        touching.push_back(colex_rank(core_scratch));
      }
    }

    // gain[chi] = scaled drop in potential if this pair avoids killing chi;
    // the conditional expectation is minimized by the color of maximum gain.
    std::fill(gain.begin(), gain.end(), BigInt(0));
    for (std::uint64_t s : touching) {
      const BigInt& w = weight[static_cast<std::size_t>(unfixed[s]) - 1];
      for (int chi = 0; chi < c; ++chi) {
        if (alive.alive(s, chi)) gain[static_cast<std::size_t>(chi)] += w;
      }
    }
    int best = 0;
    for (int chi = 1; chi < c; ++chi) {
      if (gain[static_cast<std::size_t>(chi)] > gain[static_cast<std::size_t>(best)]) best = chi;
    }
    colors[pit.rank()] = best;

    const BigInt phi_before = phi;
    for (std::uint64_t s : touching) {
      const int u = unfixed[s];
      const int alive_before = alive.alive_count(s);
      const int alive_after = alive_before - (alive.alive(s, best) ? 1 : 0);
      phi += BigInt(alive_after) * weight[static_cast<std::size_t>(u) - 1] -
             BigInt(alive_before) * weight[static_cast<std::size_t>(u)];
      unfixed[s] = static_cast<std::uint16_t>(u - 1);
      alive.kill(s, best);
    }
    if (phi > phi_before) {
      throw std::logic_error("derandomize_forbidden: potential increased");
    }
    if (trace) trace->push_back(BigRational(phi, scale));
  }

  // At the end every in-core pair is fixed, so phi = compatible * scale.
  BigInt survivors = 0;
  for (std::uint64_t s = 0; s < cores; ++s) survivors += alive.alive_count(s);
  if (phi != survivors * scale) {
    throw std::logic_error("derandomize_forbidden: potential does not match survivors");
  }

  Certificate certificate{ForbiddenTable(N, c, std::move(colors)), n,
                          survivors.convert_to<std::uint64_t>(), initial_expectation};
  if (compatible_count(certificate.forbidden, n) != certificate.compatible) {
    throw std::logic_error("derandomize_forbidden: certificate does not recount");
  }
  return certificate;
}

namespace {

std::optional<BergeWitness> trial_witness(int N, int n, int r, int c, std::uint64_t trial_seed,
                                          std::uint64_t policy_seed_base,
                                          const ColoringPolicy& policy, std::uint64_t trial,
                                          bool* infeasible) {
  const ForbiddenTable forbidden = random_forbidden(N, c, trial_seed);
  ColoringPolicy trial_policy = policy;
  if (std::holds_alternative<RandomAllowed>(trial_policy)) {
    trial_policy = RandomAllowed{derive_seed(policy_seed_base, trial)};
  }
  try {
    const CompleteColoring coloring = respecting_coloring(forbidden, r, trial_policy);
    return find_mono_berge_clique(coloring, n);
  } catch (const NoAllowedColorError&) {
    *infeasible = true;
    return std::nullopt;
  }
}

}  // namespace

MonoEstimate estimate_mono_probability(int N, int n, int r, int c, std::uint64_t trials,
                                       std::uint64_t seed, const ColoringPolicy& policy,
                                       int workers) {
  if (trials == 0) throw ZeroTrialsError("estimate_mono_probability: trials must be >= 1");
  if (n < 2) throw OutOfRangeError("estimate_mono_probability: n must be >= 2");
  if (workers < 1) throw OutOfRangeError("estimate_mono_probability: workers must be >= 1");
  const std::uint64_t policy_seed_base =
      std::holds_alternative<RandomAllowed>(policy) ? std::get<RandomAllowed>(policy).seed : 0;

  const auto run_block = [&](std::uint64_t first, std::uint64_t last) {
    std::pair<std::uint64_t, std::uint64_t> counts{0, 0};  // hits, infeasible
    for (std::uint64_t trial = first; trial < last; ++trial) {
      bool infeasible = false;
      const auto witness = trial_witness(N, n, r, c, derive_seed(seed, trial), policy_seed_base,
                                         policy, trial, &infeasible);
      if (witness) ++counts.first;
      if (infeasible) ++counts.second;
    }
    return counts;
  };

  std::uint64_t hits = 0;
  std::uint64_t infeasible = 0;
  const int lanes = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials));
  if (lanes <= 1) {
    std::tie(hits, infeasible) = run_block(0, trials);
  } else {
    std::vector<std::future<std::pair<std::uint64_t, std::uint64_t>>> futures;
    futures.reserve(lanes);
    const std::uint64_t chunk = (trials + lanes - 1) / lanes;
    for (int lane = 0; lane < lanes; ++lane) {
      const std::uint64_t first = std::min(trials, chunk * static_cast<std::uint64_t>(lane));
      const std::uint64_t last = std::min(trials, first + chunk);
      futures.push_back(std::async(std::launch::async, run_block, first, last));
    }
    for (auto& f : futures) {
      const auto [h, i] = f.get();
      hits += h;
      infeasible += i;
    }
  }

  MonoEstimate estimate;
  estimate.trials = trials;
  estimate.hits = hits;
  estimate.infeasible = infeasible;
  estimate.fraction = static_cast<double>(hits) / static_cast<double>(trials);
  // 95% Wilson score interval.
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double p = estimate.fraction;
  const double denom = 1.0 + z * z / nn;
  const double center = p + z * z / (2.0 * nn);
  const double radius = z * std::sqrt(p * (1.0 - p) / nn + z * z / (4.0 * nn * nn));
  estimate.wilson_low = std::max(0.0, (center - radius) / denom);
  estimate.wilson_high = std::min(1.0, (center + radius) / denom);
  return estimate;
}

}  // namespace berge
