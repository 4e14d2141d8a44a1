#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "rado/mc.hpp"
#include "rado/subgraph_match.hpp"

using namespace rado;

namespace {

std::uint64_t triangle_free_labeled(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < (1ULL << pairs); ++code) {
    bool adj[8][8] = {};
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i, ++k) adj[i][j] = adj[j][i] = (code >> k) & 1U;
    bool free = true;
    for (std::size_t a = 0; a < n && free; ++a)
      for (std::size_t b = a + 1; b < n && free; ++b)
        for (std::size_t c = b + 1; c < n && free; ++c) free = !(adj[a][b] && adj[b][c] && adj[a][c]);
    count += free;
  }
  return count;
}

}  // namespace

TEST(CounterStream, ReproducibleAndSeparated) {
  EXPECT_EQ(counter_word(1, 2, 3), counter_word(1, 2, 3));
  EXPECT_NE(counter_word(1, 2, 3), counter_word(1, 3, 3));
  EXPECT_NE(counter_word(1, 2, 3), counter_word(2, 2, 3));
  EXPECT_EQ(random_labeled_graph(10, 5, 7), random_labeled_graph(10, 5, 7));
  EXPECT_NE(random_labeled_graph(10, 5, 7), random_labeled_graph(10, 5, 8));
}

TEST(DensityStar, Targets) {
  EXPECT_DOUBLE_EQ(mc_density_star(1, 1, 1, 100, 2).target, 0.5);
  EXPECT_DOUBLE_EQ(mc_density_star(1, 2, 2, 100, 2).target, 0.5625);
  EXPECT_DOUBLE_EQ(mc_density_star(1, 3, 1, 100, 2).target, 0.875);
}

TEST(DensityStar, WithinThreeStderr) {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {2, 2}, {3, 1}};
  for (auto [k, n] : cases) {
    const auto r = mc_density_star(1, k, n, 10000, 20);
    EXPECT_LE(std::fabs(r.estimate.mean - r.target), 3 * r.estimate.stderr_) << k << "," << n;
    EXPECT_EQ(r.per_trial.size(), 20u);
  }
}

TEST(DensityStar, TrialMeansFromOracle) {
  // Trial 0 recomputed directly from the ambient graph with the first seed.
  const auto r = mc_density_star(40, 2, 2, 500, 2);
  EdgeOracle g(40);
  std::size_t avoid = 0;
  for (Vertex v = 5; v < 505; ++v) {
    const bool t1 = g.edge(v, 1) && g.edge(v, 2);
    const bool t2 = g.edge(v, 3) && g.edge(v, 4);
    avoid += !t1 && !t2;
  }
  EXPECT_DOUBLE_EQ(r.per_trial[0], avoid / 500.0);
}

TEST(DensityStar, Contracts) {
  EXPECT_THROW(mc_density_star(1, 1, 1, 100, 1), ContractError);
  EXPECT_THROW(mc_density_star(1, 1, 1, 0, 5), ContractError);
}

TEST(ExactGfree, EdgeFreeIsEmptyGraphOnly) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto r = exact_gfree_count(FiniteGraph::complete(2), n);
    EXPECT_EQ(r.count, 1u);
    EXPECT_EQ(r.total, 1ULL << (n * (n - 1) / 2));
    EXPECT_DOUBLE_EQ(r.probability(), std::ldexp(1.0, -static_cast<int>(n * (n - 1) / 2)));
  }
}

TEST(ExactGfree, TriangleFreeCounts) {
  double prev = 2;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto r = exact_gfree_count(FiniteGraph::complete(3), n);
    EXPECT_EQ(r.count, triangle_free_labeled(n)) << "n = " << n;
    EXPECT_LT(r.probability(), prev);
    prev = r.probability();
  }
  EXPECT_EQ(exact_gfree_count(FiniteGraph::complete(3), 4).count, 41u);
}

TEST(ExactGfree, ComplementSymmetry) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& g : enumerate_unlabeled(k))
      EXPECT_EQ(exact_gfree_count(g, 5).count, exact_gfree_count(g.complement(), 5).count);
}

TEST(McGfree, ConvergesToExact) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (std::size_t n : {4u, 5u}) {
      const auto exact = exact_gfree_count(FiniteGraph::complete(3), n).probability();
      const auto est = mc_gfree_probability(FiniteGraph::complete(3), n, 4000, seed);
      EXPECT_LE(std::fabs(est.estimate.mean - exact), 3 * est.estimate.stderr_) << "seed " << seed;
    }
  }
}

TEST(McGfree, HitsMatchPerTrialCheck) {
  const auto est = mc_gfree_probability(FiniteGraph::path(3), 6, 300, 17);
  std::uint64_t hits = 0;
  for (std::size_t t = 0; t < 300; ++t) {
    const auto g = random_labeled_graph(6, 17, t);
    std::vector<std::size_t> all(6);
    std::iota(all.begin(), all.end(), std::size_t{0});
    hits += is_pattern_free_exhaustive(g, all, FiniteGraph::path(3));
  }
  EXPECT_EQ(est.hits, hits);
}

TEST(McGfree, Envelope) {
  EXPECT_DOUBLE_EQ(gfree_envelope(0.5, 4), std::exp2(-8.0));
}

TEST(FnBound, PowersOfTwo) {
  for (std::uint64_t k = 1; k <= 10; ++k)
    for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(fn_value(1ULL << k, n), k * n);
  EXPECT_EQ(fn_value(5, 1), 3u);
}

TEST(FnBound, IndependentTripleInEightVertices) {
  const std::size_t ns[] = {8};
  const auto rows = mc_fn_bound(FiniteGraph::complete(2), ns, 1, 400, 3);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].f, 3u);
  EXPECT_FALSE(rows[0].lower_bound);
  std::uint64_t hits = 0;
  for (std::size_t t = 0; t < 400; ++t) {
    const auto g = random_labeled_graph(8, 3, t);
    bool found = false;
    for (std::size_t a = 0; a < 8 && !found; ++a)
      for (std::size_t b = a + 1; b < 8 && !found; ++b)
        for (std::size_t c = b + 1; c < 8 && !found; ++c)
          found = !g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c);
    hits += found;
  }
  EXPECT_EQ(rows[0].hits, hits);
}

TEST(FnBound, OversizedTargetIsZero) {
  const std::size_t ns[] = {8, 16};
  for (const auto& r : mc_fn_bound(FiniteGraph::complete(2), ns, 100, 10, 1)) {
    EXPECT_EQ(r.hits, 0u);
    EXPECT_EQ(r.estimate.mean, 0.0);
  }
}

TEST(MuP, SizeBand) {
  const auto a = sample_mu_p(0.5, 10000, 1);
  EXPECT_NEAR(static_cast<double>(a.size()), 5000.0, 3 * 50.0);
  EXPECT_EQ(a, sample_mu_p(0.5, 10000, 1));
  EXPECT_THROW(sample_mu_p(1.0, 10, 1), ContractError);
}

TEST(MuP, HalvesAgree) {
  const auto a = sample_mu_p(0.3, 20000, 4);
  const double lo = a.truncated(10000).size() / 10000.0;
  const double hi = (a.size() - a.truncated(10000).size()) / 10000.0;
  EXPECT_LE(std::fabs(lo - hi), 3 * std::sqrt(2 * 0.3 * 0.7 / 10000));
}

TEST(TypeFrequency, ExpectedAndBands) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EdgeOracle g(seed);
    for (std::size_t f : {2u, 4u}) {
      TypeSpec t;
      for (Vertex b = 1; b <= f; ++b) t.base.push_back(b);
      t.mask.assign(f, false);
      const auto r = type_frequency_check(g, t, 100000);
      EXPECT_DOUBLE_EQ(r.expected, std::ldexp(1.0, -static_cast<int>(f)));
      EXPECT_TRUE(r.within_band) << "seed " << seed << " |F| " << f;
      EXPECT_LT(std::fabs(r.runs_z), 4.0);
      EXPECT_EQ(r.positions, 100000u - f);
    }
  }
}

TEST(Csv, HeaderAndRows) {
  std::ostringstream out;
  const CsvRow rows[] = {{3, 0.5, 0.01, 0.125, 0.25}, {4, 0.25, 0.02, std::nullopt, 0.1}};
  write_csv(out, rows);
  EXPECT_EQ(out.str(), "n,estimate,stderr,exact_if_available,envelope\n3,0.5,0.01,0.125,0.25\n4,0.25,0.02,,0.1\n");
}

TEST(FormatReal, TwelveDigits) {
  EXPECT_EQ(format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_real(0.5), "0.5");
}
