#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado {

enum class SearchOutcome { found, absent, budget_exhausted };

std::string to_string(SearchOutcome outcome);

struct ContainmentResult {
  SearchOutcome outcome = SearchOutcome::absent;
  /// mapping[i] is the host vertex playing pattern vertex i (found only).
  std::vector<Vertex> mapping;
  std::uint64_t nodes = 0;

  /// Sorted witness set (found only).
  VertexSet witness() const;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;
inline constexpr std::size_t kMaxContainmentPattern = 10;

/// Backtracking induced-subgraph search over the host. Pattern vertices are
/// mapped in descending-degree order; a host vertex is a candidate only if
/// its type over the already-mapped images matches the pattern. "absent" is
/// reported only when the search space was exhausted within the budget.
ContainmentResult contains_induced(const EdgeOracle& oracle, const VertexSet& host, const FiniteGraph& pattern,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

/// Pairwise oracle check of mapping[i] <-> pattern vertex i.
bool verify_copy(const EdgeOracle& oracle, const FiniteGraph& pattern, std::span<const Vertex> mapping);

struct WeakUniversalityEntry {
  std::string canonical;
  FiniteGraph pattern;
  ContainmentResult result;
};

struct WeakUniversalityReport {
  std::size_t k_max = 0;
  std::vector<WeakUniversalityEntry> entries;
  bool pass = false;
  std::size_t absent = 0;
  std::size_t exhausted = 0;
};

/// Every unlabeled graph of order 1..k_max (k_max <= 7) is searched for.
WeakUniversalityReport weak_universality(const EdgeOracle& oracle, const VertexSet& host, std::size_t k_max,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

enum class GfreeMode { exact, greedy };

inline constexpr std::size_t kMaxExactWindow = 40;

/// Vertex indices of g forming a pattern-free induced subgraph. Exact mode
/// returns a maximum one by branch and bound (order <= kMaxExactWindow);
/// greedy inserts vertices in index order, rejecting any that create a copy.
std::vector<std::size_t> max_gfree_subset(const FiniteGraph& g, const FiniteGraph& pattern, GfreeMode mode);

/// Window [first, last] of the ambient graph. The returned set is
/// re-verified pattern-free: exhaustively up to 20 vertices, by deterministic
/// sampling of pattern-sized subsets above that.
VertexSet max_gfree_subset(const EdgeOracle& oracle, Vertex first, Vertex last, const FiniteGraph& pattern,
                           GfreeMode mode);

struct DyadicRow {
  unsigned k = 0;
  Vertex window_first = 0;
  Vertex window_last = 0;
  std::size_t size = 0;
  bool exact = false;
  std::uint64_t threshold = 0;  // k * N_param
  bool violation = false;       // size >= threshold
};

/// Largest pattern-free subsets of [2^k, 2^{k+1}) for k in [k_min, k_max];
/// exact where the window fits the exact bound, a greedy lower bound beyond.
std::vector<DyadicRow> dyadic_audit(const EdgeOracle& oracle, const FiniteGraph& pattern, std::uint64_t n_param,
                                    unsigned k_min, unsigned k_max);

struct Majorant {
  long double head = 0;  // sum_{n < 2^m} 1/n
  long double tail = 0;  // sum_{k >= m} k N / 2^k, closed form
  long double total() const { return head + tail; }
};

/// Convergent bound on the reciprocal sum of a set meeting each dyadic
/// window [2^k, 2^{k+1}), k >= m, in at most k*N points.
Majorant dyadic_majorant(unsigned m, std::uint64_t n_param);

}  // namespace rado
