#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rado/largeness.hpp"

using namespace rado;

namespace {

VertexSet subset_of_12(unsigned mask) {
  std::vector<Vertex> v;
  for (Vertex i = 1; i <= 12; ++i)
    if ((mask >> (i - 1)) & 1U) v.push_back(i);
  return VertexSet(v, 12);
}

Interval brute_thickness(const VertexSet& s) {
  Interval best;
  for (Vertex a = 1; a <= 12; ++a)
    for (Vertex len = 1; a + len - 1 <= 12; ++len) {
      bool all = true;
      for (Vertex x = a; x < a + len; ++x) all = all && s.contains(x);
      if (all && len > best.length) best = {a, len};
    }
  return best;
}

// Checks every (start, difference) pair directly; order of the loops gives
// the tie-breaking rule.
Progression brute_ap(const VertexSet& s) {
  if (s.empty()) return {};
  Progression best{s[0], 0, 1};
  for (Vertex d = 1; d <= 11; ++d)
    for (Vertex a = 1; a <= 12; ++a) {
      std::size_t len = 0;
      while (a + len * d <= 12 && s.contains(a + len * d)) ++len;
      if (len >= 2 && len > best.length) best = {a, d, len};
    }
  return best;
}

long double harmonic(Vertex n) {
  long double h = 0;
  for (Vertex i = n; i >= 1; --i) h += 1.0L / i;
  return h;
}

}  // namespace

TEST(Thickness, BruteForceAllSubsetsOf12) {
  for (unsigned m = 0; m < 4096; ++m) {
    const auto s = subset_of_12(m);
    EXPECT_EQ(thickness(s), brute_thickness(s)) << "mask " << m;
  }
}

TEST(LongestAp, BruteForceAllSubsetsOf12) {
  for (unsigned m = 0; m < 4096; ++m) {
    const auto s = subset_of_12(m);
    const auto got = longest_ap(s);
    const auto want = brute_ap(s);
    EXPECT_EQ(got.length, want.length) << "mask " << m;
    EXPECT_EQ(got, want) << "mask " << m;
  }
}

TEST(LongestAp, Examples) {
  EXPECT_EQ(longest_ap(VertexSet({1, 3, 5, 7, 8}, 8)), (Progression{1, 2, 4}));
  EXPECT_EQ(longest_ap(VertexSet({}, 8)).length, 0u);
  EXPECT_THROW(longest_ap(VertexSet::interval(1, 6000)), ContractError);
}

TEST(Density, EvensAreHalf) {
  std::vector<Vertex> ev;
  for (Vertex i = 2; i <= 1024; i += 2) ev.push_back(i);
  const auto r = density_profile(VertexSet(ev, 1024), dyadic_checkpoints(1024));
  for (double d : r.densities) EXPECT_DOUBLE_EQ(d, 0.5);
  EXPECT_DOUBLE_EQ(r.sup_density, 0.5);
}

TEST(Density, RefinementDoesNotLowerSup) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vertex> v;
    for (Vertex i = 1; i <= 500; ++i)
      if (rng() % 3 == 0) v.push_back(i);
    const VertexSet s(v, 500);
    std::vector<Vertex> coarse{50, 250, 500};
    std::vector<Vertex> fine{10, 50, 100, 250, 300, 500};
    EXPECT_GE(density_profile(s, fine).sup_density, density_profile(s, coarse).sup_density);
  }
}

TEST(Density, BadCheckpoints) {
  const auto s = VertexSet::interval(1, 10);
  EXPECT_THROW(density_profile(s, {}), ContractError);
  EXPECT_THROW(density_profile(s, {4, 2}), ContractError);
  EXPECT_THROW(density_profile(s, {20}), ContractError);
}

TEST(WeightedSum, Harmonic) {
  const auto s = VertexSet::interval(1, 1'000'000);
  EXPECT_NEAR(static_cast<double>(weighted_sum(s, WeightFunction::reciprocal())), 14.392726722865, 1e-3);
  EXPECT_NEAR(static_cast<double>(weighted_sum(s, WeightFunction::reciprocal())),
              static_cast<double>(harmonic(1'000'000)), 1e-9);
}

TEST(WeightedSum, PowerWeight) {
  const auto s = VertexSet::interval(1, 1000);
  long double want = 0;
  for (Vertex i = 1; i <= 1000; ++i) want += std::pow(static_cast<long double>(i), -0.5L);
  EXPECT_NEAR(static_cast<double>(weighted_sum(s, WeightFunction::power(0.5))), static_cast<double>(want), 1e-9);
  EXPECT_THROW(WeightFunction::power(0), ContractError);
  EXPECT_THROW(WeightFunction::power(1.5), ContractError);
}

TEST(WeightedSum, AdditiveAndMonotone) {
  std::mt19937_64 rng(8);
  const auto f = WeightFunction::reciprocal();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vertex> a, b, both;
    for (Vertex i = 1; i <= 2000; ++i) {
      const auto r = rng() % 3;
      if (r == 0) a.push_back(i);
      if (r == 1) b.push_back(i);
      if (r != 2) both.push_back(i);
    }
    const VertexSet sa(a, 2000), sb(b, 2000), su(both, 2000);
    EXPECT_NEAR(static_cast<double>(weighted_sum(su, f)),
                static_cast<double>(weighted_sum(sa, f) + weighted_sum(sb, f)), 1e-12);
    EXPECT_GE(weighted_sum(su, f), weighted_sum(sa, f));
  }
}

TEST(Pi02Force, SubstantialExamples) {
  const auto fam = FamilyDescriptor::substantial();
  // Least k' with 1 + 1/2 + ... + 1/k' > 1 is 2.
  EXPECT_EQ(pi02_force(fam, 1, VertexSet::interval(1, 4), 4), Vertex{2});
  EXPECT_EQ(pi02_force(fam, 2, VertexSet::interval(1, 31), 31), Vertex{4});
  EXPECT_FALSE(pi02_force(fam, 3, VertexSet({1}, 1000), 1000));
  EXPECT_FALSE(pi02_force(fam, 2, VertexSet::interval(1, 31), 3));
}

TEST(Pi02Force, LeastIndexByDirectSummation) {
  const auto fam = FamilyDescriptor::substantial();
  for (std::size_t level = 1; level <= 6; ++level) {
    Vertex k = 0;
    long double h = 0;
    while (h <= level) h += 1.0L / ++k;
    EXPECT_EQ(fam.force(level, VertexSet::interval(1, 1000), 1000), k) << "level " << level;
  }
}

TEST(Pi02Force, MonotoneUnderSupersetsAgreeingBelow) {
  std::mt19937_64 rng(12);
  const auto fam = FamilyDescriptor::substantial();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vertex> a;
    for (Vertex i = 1; i <= 400; ++i)
      if (rng() % 2) a.push_back(i);
    const VertexSet s(a, 400);
    const auto k = fam.force(1 + trial % 2, s, 400);
    if (!k) continue;
    std::vector<Vertex> b;
    for (Vertex i = 1; i <= 400; ++i)
      if (i <= *k ? s.contains(i) : (s.contains(i) || rng() % 2)) b.push_back(i);
    EXPECT_EQ(fam.force(1 + trial % 2, VertexSet(b, 400), 400), k);
  }
}

TEST(Intervals, FormatAndParse) {
  const VertexSet s({1, 2, 3, 7, 9, 10}, 10);
  EXPECT_EQ(format_intervals(s), "1-3,7,9-10");
  EXPECT_EQ(parse_intervals("1-3,7,9-10", 10), s);
  EXPECT_EQ(parse_intervals("1-3,2", 10), VertexSet({1, 2, 3}, 10));  // unions may overlap
  EXPECT_THROW(parse_intervals("1-11", 10), ContractError);
  EXPECT_THROW(parse_intervals("1-x", 10), ParseError);
  EXPECT_EQ(parse_vertex_lines("# header\n3\n\n1\n", 5), VertexSet({1, 3}, 5));
}
