#include "rado/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "rado/subgraph_match.hpp"

namespace rado {

std::string to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found:
      return "found";
    case SearchOutcome::absent:
      return "absent";
    case SearchOutcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

VertexSet ContainmentResult::witness() const {
  Vertex top = 0;
  for (Vertex v : mapping) top = std::max(top, v);
  return VertexSet::from_unsorted(mapping, top);
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const EdgeOracle& oracle, const VertexSet& host, const FiniteGraph& pattern, std::uint64_t budget)
      : oracle_(oracle),
        host_(host),
        pattern_(pattern),
        order_(degree_order(pattern)),
        image_(pattern.order()),
        used_(host.size(), false),
        budget_(budget) {}

  ContainmentResult run() {
    ContainmentResult r;
    const bool found = extend(0);
    r.nodes = nodes_;
    if (found) {
      r.outcome = SearchOutcome::found;
      r.mapping = image_;
    } else {
      r.outcome = exhausted_ ? SearchOutcome::budget_exhausted : SearchOutcome::absent;
    }
    return r;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t p = order_[depth];
    for (std::size_t c = 0; c < host_.size(); ++c) {
      if (used_[c]) continue;
      const Vertex h = host_[c];
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t q = order_[d];
        consistent = oracle_.edge_unchecked(h, image_[q]) == pattern_.has_edge(p, q);
      }
      if (!consistent) continue;
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      used_[c] = true;
      image_[p] = h;
      if (extend(depth + 1)) return true;
      used_[c] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const EdgeOracle& oracle_;
  const VertexSet& host_;
  const FiniteGraph& pattern_;
  std::vector<std::size_t> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

void check_pattern(const FiniteGraph& pattern) {
  if (pattern.order() == 0) throw ContractError("pattern must have at least one vertex");
  if (pattern.order() > kMaxCanonicalOrder) throw ContractError("pattern order above 8 is not supported here");
}

// Pattern-free subset grown over vertices 0..count-1 in index order, with
// adjacency supplied by a callback. Only the chosen vertices and the current
// candidate are materialized.
std::vector<std::size_t> greedy_gfree(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& adj,
                                      const FiniteGraph& pattern) {
  std::vector<std::size_t> chosen;
  std::size_t capacity = 64;
  FiniteGraph local(capacity);
  std::vector<std::size_t> local_ids;
  for (std::size_t v = 0; v < count; ++v) {
    const std::size_t slot = chosen.size();
    if (slot + 1 > capacity) {
      capacity *= 2;
      FiniteGraph bigger(capacity);
      for (std::size_t i = 0; i < slot; ++i)
        for (std::size_t j = i + 1; j < slot; ++j)
          if (local.has_edge(i, j)) bigger.set_edge(i, j);
      local = std::move(bigger);
    }
    for (std::size_t i = 0; i < slot; ++i) local.set_edge(i, slot, adj(chosen[i], v));
    local_ids.resize(slot + 1);
    std::iota(local_ids.begin(), local_ids.end(), std::size_t{0});
    if (!find_induced_copy(local, local_ids, pattern, slot)) chosen.push_back(v);
  }
  return chosen;
}

class GfreeBranchAndBound {
 public:
  GfreeBranchAndBound(const FiniteGraph& g, const FiniteGraph& pattern) : g_(g), pattern_(pattern) {}

  std::vector<std::size_t> run() {
    search(0);
    return best_;
  }

 private:
  void search(std::size_t i) {
    if (have_best_ && current_.size() + (g_.order() - i) <= best_.size()) return;
    if (i == g_.order()) {
      if (!have_best_ || current_.size() > best_.size()) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    current_.push_back(i);
    if (!find_induced_copy(g_, current_, pattern_, i)) search(i + 1);
    current_.pop_back();
    search(i + 1);
  }

  const FiniteGraph& g_;
  const FiniteGraph& pattern_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  bool have_best_ = false;
};

bool sampled_pattern_free(const FiniteGraph& g, std::span<const std::size_t> vertices, const FiniteGraph& pattern,
                          std::uint64_t samples) {
  const std::size_t k = pattern.order();
  if (k > vertices.size()) return true;
  const std::string target = canonical_form(pattern);
  std::vector<std::size_t> pool(vertices.begin(), vertices.end());
  std::vector<std::size_t> chosen(k);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Partial Fisher-Yates driven by a counter-based stream.
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t r = mix64(mix64(s * kGoldenGamma) ^ (i + 1));
      const std::size_t j = i + static_cast<std::size_t>(r % (pool.size() - i));
      std::swap(pool[i], pool[j]);
      chosen[i] = pool[i];
    }
    if (canonical_form(g.induced(chosen)) == target) return false;
  }
  return true;
}

}  // namespace

ContainmentResult contains_induced(const EdgeOracle& oracle, const VertexSet& host, const FiniteGraph& pattern,
                                   std::uint64_t node_budget) {
  if (pattern.order() > kMaxContainmentPattern) throw ContractError("pattern order above 10");
  if (node_budget == 0) throw ContractError("node budget must be at least 1");
  ContainmentResult r;
  if (pattern.order() == 0) {
    r.outcome = SearchOutcome::found;
    return r;
  }
  r = InducedSearch(oracle, host, pattern, node_budget).run();
  if (r.outcome == SearchOutcome::found && !verify_copy(oracle, pattern, r.mapping)) {
    throw std::logic_error("induced copy failed re-verification");
  }
  return r;
}

bool verify_copy(const EdgeOracle& oracle, const FiniteGraph& pattern, std::span<const Vertex> mapping) {
  if (mapping.size() != pattern.order()) return false;
  for (std::size_t i = 0; i < mapping.size(); ++i)
    for (std::size_t j = i + 1; j < mapping.size(); ++j) {
      if (mapping[i] == mapping[j]) return false;
      if (oracle.edge(mapping[i], mapping[j]) != pattern.has_edge(i, j)) return false;
    }
  return true;
}

WeakUniversalityReport weak_universality(const EdgeOracle& oracle, const VertexSet& host, std::size_t k_max,
                                         std::uint64_t node_budget) {
  if (k_max < 1 || k_max > 7) throw ContractError("k_max must lie in 1..7");
  WeakUniversalityReport report;
  report.k_max = k_max;
  for (std::size_t k = 1; k <= k_max; ++k) {
    for (auto& g : enumerate_unlabeled(k)) {
      WeakUniversalityEntry e{canonical_form(g), g, contains_induced(oracle, host, g, node_budget)};
      if (e.result.outcome == SearchOutcome::absent) ++report.absent;
      if (e.result.outcome == SearchOutcome::budget_exhausted) ++report.exhausted;
      report.entries.push_back(std::move(e));
    }
  }
  report.pass = report.absent == 0 && report.exhausted == 0;
  return report;
}

std::vector<std::size_t> max_gfree_subset(const FiniteGraph& g, const FiniteGraph& pattern, GfreeMode mode) {
  check_pattern(pattern);
  if (mode == GfreeMode::greedy) {
    return greedy_gfree(g.order(), [&](std::size_t i, std::size_t j) { return g.has_edge(i, j); }, pattern);
  }
  if (g.order() > kMaxExactWindow) throw ContractError("window length over exact bound");
  return GfreeBranchAndBound(g, pattern).run();
}

VertexSet max_gfree_subset(const EdgeOracle& oracle, Vertex first, Vertex last, const FiniteGraph& pattern,
                           GfreeMode mode) {
  check_pattern(pattern);
  if (first == 0 || first > last) throw ContractError("window must be a nonempty interval of positive integers");
  const std::size_t length = last - first + 1;
  std::vector<std::size_t> picked;
  FiniteGraph materialized;
  if (mode == GfreeMode::exact) {
    if (length > kMaxExactWindow) throw ContractError("window length over exact bound");
    materialized = induced_subgraph(oracle, VertexSet::interval(first, last));
    picked = max_gfree_subset(materialized, pattern, mode);
  } else {
    picked = greedy_gfree(
        length, [&](std::size_t i, std::size_t j) { return oracle.edge(first + i, first + j); }, pattern);
  }

  std::vector<Vertex> chosen;
  chosen.reserve(picked.size());
  for (std::size_t i : picked) chosen.push_back(first + i);
  const FiniteGraph sub = induced_subgraph(oracle, chosen);
  std::vector<std::size_t> all(sub.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const bool ok = chosen.size() <= 20 ? is_pattern_free_exhaustive(sub, all, pattern)
                                      : sampled_pattern_free(sub, all, pattern, 20000);
  if (!ok) throw std::logic_error("pattern-free subset failed re-verification");
  return VertexSet(std::move(chosen), last);
}

std::vector<DyadicRow> dyadic_audit(const EdgeOracle& oracle, const FiniteGraph& pattern, std::uint64_t n_param,
                                    unsigned k_min, unsigned k_max) {
  if (k_min > k_max) throw ContractError("empty k range");
  if (k_max > 20) throw ContractError("dyadic audit supports k <= 20");
  std::vector<DyadicRow> rows;
  for (unsigned k = k_min; k <= k_max; ++k) {
    DyadicRow row;
    row.k = k;
    row.window_first = Vertex{1} << k;
    row.window_last = (Vertex{1} << (k + 1)) - 1;
    row.exact = (row.window_last - row.window_first + 1) <= kMaxExactWindow;
    row.size = max_gfree_subset(oracle, row.window_first, row.window_last, pattern,
                                row.exact ? GfreeMode::exact : GfreeMode::greedy)
                   .size();
    row.threshold = static_cast<std::uint64_t>(k) * n_param;
    row.violation = row.size >= row.threshold;
    rows.push_back(row);
  }
  return rows;
}

Majorant dyadic_majorant(unsigned m, std::uint64_t n_param) {
  if (m < 1 || m > 30) throw ContractError("majorant index m must lie in 1..30");
  Majorant out;
  const Vertex top = (Vertex{1} << m) - 1;
  long double head = 0.0L;
  for (Vertex n = top; n >= 1; --n) head += 1.0L / static_cast<long double>(n);
  out.head = head;
  // sum_{k>=m} k x^k at x = 1/2 equals (m+1) / 2^{m-1}.
  out.tail = static_cast<long double>(n_param) * static_cast<long double>(m + 1) / std::ldexp(1.0L, static_cast<int>(m) - 1);
  return out;
}

}  // namespace rado
