#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "rado/graph_core.hpp"

using namespace rado;

namespace {

// Straight transcription of the edge rule, kept apart from the library code.
bool reference_edge(std::uint64_t seed, Vertex u, Vertex v, std::uint64_t num, std::uint64_t den) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  const Vertex a = std::min(u, v), b = std::max(u, v);
  const std::uint64_t rot = (b << 32) | (b >> 32);
  const std::uint64_t h = mix(seed ^ mix((a * 0x9E3779B97F4A7C15ULL) ^ rot));
  const long double x = static_cast<long double>(h >> 11) / 9007199254740992.0L;
  return x < static_cast<long double>(num) / static_cast<long double>(den);
}

}  // namespace

TEST(EdgeOracle, MatchesReferenceRule) {
  for (std::uint64_t seed : {0ULL, 7ULL, 0xDEADBEEFULL}) {
    EdgeOracle g(seed);
    EdgeOracle sparse(seed, {1, 3});
    for (Vertex u = 1; u <= 40; ++u)
      for (Vertex v = u + 1; v <= 40; ++v) {
        EXPECT_EQ(g.edge(u, v), reference_edge(seed, u, v, 1, 2));
        EXPECT_EQ(sparse.edge(u, v), reference_edge(seed, u, v, 1, 3));
      }
  }
}

TEST(EdgeOracle, SymmetricAndDeterministic) {
  EdgeOracle a(42), b(42);
  for (Vertex u = 1; u < 100; ++u)
    for (Vertex v = 1; v < 100; ++v) {
      if (u == v) continue;
      EXPECT_EQ(a.edge(u, v), a.edge(v, u));
      EXPECT_EQ(a.edge(u, v), b.edge(u, v));
    }
}

TEST(EdgeOracle, RejectsLoopsAndZero) {
  EdgeOracle g(1);
  EXPECT_THROW(g.edge(3, 3), ContractError);
  EXPECT_THROW(g.edge(0, 3), ContractError);
}

TEST(EdgeOracle, ProbabilityOneIsComplete) {
  EdgeOracle g(5, {1, 1});
  for (Vertex u = 1; u < 30; ++u)
    for (Vertex v = u + 1; v < 30; ++v) EXPECT_TRUE(g.edge(u, v));
}

TEST(EdgeOracle, EdgeFrequencyWithinThreeSigma) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EdgeOracle g(seed);
    for (Vertex n : {128ULL, 512ULL}) {
      std::uint64_t edges = 0;
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges += g.edge(u, v);
      const double pairs = static_cast<double>(n * (n - 1) / 2);
      EXPECT_LE(std::fabs(edges - pairs / 2), 3 * std::sqrt(pairs / 4)) << "seed " << seed << " n " << n;
    }
  }
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("1/2"), (Rational{1, 2}));
  EXPECT_EQ(parse_rational("2/4"), (Rational{1, 2}));
  EXPECT_EQ(parse_rational("0.25"), (Rational{1, 4}));
  EXPECT_EQ(parse_rational("1"), (Rational{1, 1}));
  EXPECT_THROW(parse_rational("0"), ContractError);
  EXPECT_THROW(parse_rational("3/2"), ContractError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Seed, DecimalAndHex) {
  EXPECT_EQ(parse_seed("17"), 17u);
  EXPECT_EQ(parse_seed("0x11"), 17u);
  EXPECT_THROW(parse_seed("abc"), ParseError);
}

TEST(VertexSet, Validation) {
  EXPECT_THROW(VertexSet({3, 2}, 10), ContractError);
  EXPECT_THROW(VertexSet({0, 2}, 10), ContractError);
  EXPECT_THROW(VertexSet({2, 11}, 10), ContractError);
  const auto s = VertexSet::from_unsorted({5, 1, 3, 3}, 10);
  EXPECT_EQ(s.elements(), (std::vector<Vertex>{1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.truncated(3).elements(), (std::vector<Vertex>{1, 3}));
}

TEST(Types, ClassesPartitionTheRest) {
  EdgeOracle g(11);
  const std::vector<Vertex> base{2, 5, 9};
  const auto pool = VertexSet::interval(1, 300);
  std::set<Vertex> seen;
  std::size_t total = 0;
  for (unsigned m = 0; m < 8; ++m) {
    TypeSpec t{base, {bool(m & 1), bool(m & 2), bool(m & 4)}};
    for (Vertex v : vertices_of_type(g, t, pool)) {
      EXPECT_TRUE(seen.insert(v).second);
      EXPECT_EQ(type_of(g, v, base), t);
      ++total;
    }
  }
  EXPECT_EQ(total, 300 - base.size());
}

TEST(Types, BaseVertexHasNoType) {
  EdgeOracle g(1);
  const std::vector<Vertex> base{1, 2};
  EXPECT_THROW(type_of(g, 2, base), ContractError);
}

TEST(Extension, EightBaseVerticesAllWitnessed) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EdgeOracle g(seed);
    const auto r = extension_check(g, VertexSet::interval(1, 8), 4096);
    ASSERT_EQ(r.witnesses.size(), 256u);
    EXPECT_TRUE(r.pass);
    // Each witness is the least vertex of its type: re-scan from 9.
    for (std::size_t t = 0; t < 256; ++t) {
      ASSERT_TRUE(r.witnesses[t]);
      const Vertex w = *r.witnesses[t];
      auto mask_of = [&](Vertex v) {
        std::size_t m = 0;
        for (Vertex b = 1; b <= 8; ++b) m |= std::size_t(g.edge(v, b)) << (b - 1);
        return m;
      };
      EXPECT_EQ(mask_of(w), t);
      for (Vertex v = 9; v < w; ++v) EXPECT_NE(mask_of(v), t);
    }
  }
}

TEST(Extension, TinyBoundReportsMissing) {
  EdgeOracle g(3);
  const auto r = extension_check(g, VertexSet::interval(1, 4), 10);
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.missing(), 16u - 6u);
}

TEST(FiniteGraph, NamedGraphs) {
  EXPECT_EQ(FiniteGraph::complete(5).edge_count(), 10u);
  EXPECT_EQ(FiniteGraph::cycle(5).edge_count(), 5u);
  EXPECT_EQ(FiniteGraph::path(4).edge_count(), 3u);
  const auto p = FiniteGraph::petersen();
  EXPECT_EQ(p.edge_count(), 15u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(p.degree(i), 3u);
  EXPECT_EQ(FiniteGraph::complete(6).complement(), FiniteGraph::empty(6));
}

TEST(InducedSubgraph, MatchesOracle) {
  EdgeOracle g(9);
  const VertexSet s({3, 7, 20, 21, 50}, 50);
  const auto h = induced_subgraph(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j) EXPECT_EQ(h.has_edge(i, j), g.edge(s[i], s[j]));
}
