#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado {

/// Pattern vertices sorted by descending degree, ties by index.
std::vector<std::size_t> degree_order(const FiniteGraph& pattern);

/// Searches host[candidates] for an induced copy of pattern. On success the
/// result maps pattern vertex i to a host index. With an anchor, only copies
/// that use the anchor vertex are considered (the anchor must be among the
/// candidates).
std::optional<std::vector<std::size_t>> find_induced_copy(const FiniteGraph& host,
                                                          std::span<const std::size_t> candidates,
                                                          const FiniteGraph& pattern,
                                                          std::optional<std::size_t> anchor = {});

/// Backtracking test: no induced copy of pattern inside host[vertices].
bool is_pattern_free(const FiniteGraph& host, std::span<const std::size_t> vertices,
                     const FiniteGraph& pattern);

/// Independent check by enumerating every |pattern|-subset and comparing
/// canonical forms. Pattern order is limited by kMaxCanonicalOrder.
bool is_pattern_free_exhaustive(const FiniteGraph& host, std::span<const std::size_t> vertices,
                                const FiniteGraph& pattern);

}  // namespace rado
