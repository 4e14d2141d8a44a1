#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado {

/// Counter-based uniform word keyed by (seed, stream, index). Independent of
/// EdgeOracle: a distinct domain constant separates the two.
std::uint64_t counter_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);
/// Uniform double in [0,1) from the top 53 bits of counter_word.
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

struct Estimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t trials = 0;
};

struct DensityStarResult {
  Estimate estimate;
  double target = 0;  // (1 - 2^-k)^n
  std::vector<double> per_trial;
};

/// Trial t uses the ambient graph with seed first_seed + t. Base sets are
/// F_i = [(i-1)k+1, ik]; every t_i is the all-ones type; the pool is the
/// next pool_size vertices. Measures the fraction of the pool avoiding
/// every t_i.
DensityStarResult mc_density_star(std::uint64_t first_seed, std::size_t k, std::size_t n, std::size_t pool_size,
                                  std::size_t trials);

/// Labeled graph on n vertices; pair (i,j), i<j, is an edge with probability
/// 1/2 using the bit stream keyed by (seed, trial, pair index).
FiniteGraph random_labeled_graph(std::size_t n, std::uint64_t seed, std::uint64_t trial);

struct GfreeExact {
  std::uint64_t count = 0;  // pattern-free labeled graphs
  std::uint64_t total = 0;  // 2^{C(n,2)}
  double probability() const { return static_cast<double>(count) / static_cast<double>(total); }
};

/// Enumerates every labeled graph on n <= 6 vertices.
GfreeExact exact_gfree_count(const FiniteGraph& pattern, std::size_t n);

struct GfreeEstimate {
  std::uint64_t hits = 0;
  Estimate estimate;
};

/// pattern order <= 6, n <= 32.
GfreeEstimate mc_gfree_probability(const FiniteGraph& pattern, std::size_t n, std::size_t trials, std::uint64_t seed);

/// 2^{-c n^2}.
double gfree_envelope(double c, std::size_t n);

/// ceil(N log2 n); exactly k*N when n = 2^k.
std::uint64_t fn_value(std::uint64_t n, std::uint64_t n_param);

struct FnRow {
  std::size_t n = 0;
  std::uint64_t f = 0;
  std::uint64_t hits = 0;
  Estimate estimate;
  bool lower_bound = false;  // greedy search certifies presence only
  double envelope = 0;       // n^{-2 f(n)}
};

inline constexpr std::size_t kExactFnLimit = 16;

/// For each n, the fraction of random n-vertex graphs holding a pattern-free
/// induced subgraph on f(n) vertices. Exact search up to kExactFnLimit, greedy
/// beyond (flagged as a lower bound).
std::vector<FnRow> mc_fn_bound(const FiniteGraph& pattern, std::span<const std::size_t> n_list,
                               std::uint64_t n_param, std::size_t trials, std::uint64_t seed);

/// Includes each n <= N independently with probability p.
VertexSet sample_mu_p(double p, Vertex prefix_bound, std::uint64_t seed);

struct TypeFrequencyReport {
  std::uint64_t positions = 0;  // vertices in (max F, N]
  std::uint64_t hits = 0;
  double frequency = 0;
  double expected = 0;  // 2^{-|F|}
  double sigma = 0;     // binomial sd of the frequency
  bool within_band = false;
  std::uint64_t runs = 0;
  double runs_z = 0;  // Wald-Wolfowitz statistic
};

/// Frequency of vertices of type t in (max F, N] against 2^{-|F|}, with a
/// 3-sigma band and a runs test on the hit/miss sequence.
TypeFrequencyReport type_frequency_check(const EdgeOracle& oracle, const TypeSpec& t, Vertex prefix_bound);

/// CSV with columns n, estimate, stderr, exact_if_available, envelope.
struct CsvRow {
  std::size_t n = 0;
  double estimate = 0;
  double stderr_ = 0;
  std::optional<double> exact;
  double envelope = 0;
};
void write_csv(std::ostream& out, std::span<const CsvRow> rows);

/// Fixed 12-significant-digit rendering used by every report.
std::string format_real(double x);

}  // namespace rado
