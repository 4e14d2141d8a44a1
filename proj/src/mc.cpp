#include "rado/mc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "rado/audit.hpp"
#include "rado/subgraph_match.hpp"

namespace rado {

namespace {

constexpr std::uint64_t kStreamDomain = 0x6A09E667F3BCC909ULL;
constexpr std::uint64_t kStreamMultiplier = 0xD1B54A32D192ED03ULL;
constexpr std::uint64_t kMuPStream = 1;  // graph trials use even streams

std::uint64_t graph_stream(std::uint64_t trial) { return trial << 1; }

Estimate summarize(std::span<const double> values) {
  Estimate e;
  e.trials = values.size();
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  e.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    e.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  }
  return e;
}

Estimate bernoulli(std::uint64_t hits, std::uint64_t trials) {
  Estimate e;
  e.trials = trials;
  if (trials == 0) return e;
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  e.mean = p;
  e.stderr_ = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return e;
}

}  // namespace

std::uint64_t counter_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return mix64(seed ^ mix64((stream * kStreamMultiplier) ^ rotl64(index, 29) ^ kStreamDomain));
}

double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return static_cast<double>(counter_word(seed, stream, index) >> 11) * 0x1.0p-53;
}

DensityStarResult mc_density_star(std::uint64_t first_seed, std::size_t k, std::size_t n, std::size_t pool_size,
                                  std::size_t trials) {
  if (k == 0 || n == 0) throw ContractError("k and n must be positive");
  if (pool_size == 0) throw ContractError("pool too small");
  if (trials < 2) throw ContractError("at least two trials are needed for a standard error");
  DensityStarResult out;
  out.target = std::pow(1.0 - std::ldexp(1.0, -static_cast<int>(k)), static_cast<double>(n));
  const Vertex bases_end = static_cast<Vertex>(n * k);
  for (std::size_t t = 0; t < trials; ++t) {
    const EdgeOracle oracle(first_seed + t);
    std::uint64_t avoid = 0;
    for (Vertex x = bases_end + 1; x <= bases_end + pool_size; ++x) {
      bool avoids_all = true;
      for (std::size_t i = 0; i < n && avoids_all; ++i) {
        bool all_ones = true;
        for (Vertex b = i * k + 1; b <= (i + 1) * k && all_ones; ++b) all_ones = oracle.edge_unchecked(x, b);
        avoids_all = !all_ones;
      }
      if (avoids_all) ++avoid;
    }
    out.per_trial.push_back(static_cast<double>(avoid) / static_cast<double>(pool_size));
  }
  out.estimate = summarize(out.per_trial);
  return out;
}

FiniteGraph random_labeled_graph(std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  FiniteGraph g(n);
  std::uint64_t pair = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++pair)
      if (counter_word(seed, graph_stream(trial), pair) >> 63) g.set_edge(i, j);
  return g;
}

GfreeExact exact_gfree_count(const FiniteGraph& pattern, std::size_t n) {
  if (n > 6) throw ContractError("exact G-free count supports n <= 6");
  if (pattern.order() == 0) throw ContractError("pattern must have at least one vertex");
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  GfreeExact out;
  out.total = std::uint64_t{1} << pairs;
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::uint64_t code = 0; code < out.total; ++code) {
    FiniteGraph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if ((code >> bit) & 1U) g.set_edge(i, j);
    if (is_pattern_free(g, all, pattern)) ++out.count;
  }
  return out;
}

GfreeEstimate mc_gfree_probability(const FiniteGraph& pattern, std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (pattern.order() == 0 || pattern.order() > 6) throw ContractError("pattern order must lie in 1..6");
  if (n > 32) throw ContractError("sampled G-free probability supports n <= 32");
  if (trials == 0) throw ContractError("trials must be positive");
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  GfreeEstimate out;
  for (std::size_t t = 0; t < trials; ++t)
    if (is_pattern_free(random_labeled_graph(n, seed, t), all, pattern)) ++out.hits;
  out.estimate = bernoulli(out.hits, trials);
  return out;
}

double gfree_envelope(double c, std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::exp2(-c * nn * nn);
}

std::uint64_t fn_value(std::uint64_t n, std::uint64_t n_param) {
  if (n == 0) throw ContractError("f(n) is defined for n >= 1");
  if (std::has_single_bit(n)) return static_cast<std::uint64_t>(std::countr_zero(n)) * n_param;
  return static_cast<std::uint64_t>(
      std::ceil(static_cast<long double>(n_param) * std::log2(static_cast<long double>(n))));
}

std::vector<FnRow> mc_fn_bound(const FiniteGraph& pattern, std::span<const std::size_t> n_list,
                               std::uint64_t n_param, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ContractError("trials must be positive");
  std::vector<FnRow> rows;
  for (std::size_t n : n_list) {
    if (n == 0 || n > 64) throw ContractError("mc_fn_bound supports 1 <= n <= 64");
    FnRow row;
    row.n = n;
    row.f = fn_value(n, n_param);
    row.lower_bound = n > kExactFnLimit;
    row.envelope = std::pow(static_cast<double>(n), -2.0 * static_cast<double>(row.f));
    if (row.f <= n) {
      const GfreeMode mode = row.lower_bound ? GfreeMode::greedy : GfreeMode::exact;
      for (std::size_t t = 0; t < trials; ++t) {
        const auto g = random_labeled_graph(n, seed, t);
        if (max_gfree_subset(g, pattern, mode).size() >= row.f) ++row.hits;
      }
    }
    row.estimate = bernoulli(row.hits, trials);
    rows.push_back(row);
  }
  return rows;
}

VertexSet sample_mu_p(double p, Vertex prefix_bound, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw ContractError("mu_p needs 0 < p < 1");
  std::vector<Vertex> out;
  for (Vertex n = 1; n <= prefix_bound; ++n)
    if (counter_uniform(seed, kMuPStream, n) < p) out.push_back(n);
  return VertexSet(std::move(out), prefix_bound);
}

TypeFrequencyReport type_frequency_check(const EdgeOracle& oracle, const TypeSpec& t, Vertex prefix_bound) {
  if (t.base.size() != t.mask.size()) throw ContractError("type mask length differs from base");
  const Vertex start = t.base.empty() ? 1 : *std::max_element(t.base.begin(), t.base.end()) + 1;
  TypeFrequencyReport r;
  r.expected = std::ldexp(1.0, -static_cast<int>(t.base.size()));
  bool prev = false;
  for (Vertex x = start; x <= prefix_bound; ++x) {
    const bool hit = has_type(oracle, x, t);
    if (hit) ++r.hits;
    if (r.positions == 0 || hit != prev) ++r.runs;
    prev = hit;
    ++r.positions;
  }
  if (r.positions == 0) return r;
  const double n = static_cast<double>(r.positions);
  r.frequency = static_cast<double>(r.hits) / n;
  r.sigma = std::sqrt(r.expected * (1.0 - r.expected) / n);
  r.within_band = std::fabs(r.frequency - r.expected) <= 3.0 * r.sigma;
  const double n1 = static_cast<double>(r.hits);
  const double n2 = n - n1;
  if (n1 > 0 && n2 > 0 && n > 1) {
    const double mu = 2.0 * n1 * n2 / n + 1.0;
    const double var = 2.0 * n1 * n2 * (2.0 * n1 * n2 - n) / (n * n * (n - 1.0));
    r.runs_z = (static_cast<double>(r.runs) - mu) / std::sqrt(var);
  }
  return r;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_csv(std::ostream& out, std::span<const CsvRow> rows) {
  out << "n,estimate,stderr,exact_if_available,envelope\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_real(r.estimate) << ',' << format_real(r.stderr_) << ',';
    if (r.exact) out << format_real(*r.exact);
    out << ',' << format_real(r.envelope) << '\n';
  }
}

}  // namespace rado
