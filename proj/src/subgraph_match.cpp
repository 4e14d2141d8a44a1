#include "rado/subgraph_match.hpp"

#include <algorithm>
#include <numeric>

namespace rado {

std::vector<std::size_t> degree_order(const FiniteGraph& pattern) {
  std::vector<std::size_t> order(pattern.order());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  return order;
}

namespace {

struct Matcher {
  const FiniteGraph& host;
  std::span<const std::size_t> candidates;
  const FiniteGraph& pattern;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;  // image[pattern vertex]
  std::vector<bool> used;          // by position in candidates

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const std::size_t p = order[depth];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (used[c]) continue;
      const std::size_t h = candidates[c];
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t q = order[d];
        consistent = host.has_edge(h, image[q]) == pattern.has_edge(p, q);
      }
      if (!consistent) continue;
      used[c] = true;
      image[p] = h;
      if (extend(depth + 1)) return true;
      used[c] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_induced_copy(const FiniteGraph& host,
                                                          std::span<const std::size_t> candidates,
                                                          const FiniteGraph& pattern,
                                                          std::optional<std::size_t> anchor) {
  const std::size_t k = pattern.order();
  if (k == 0) return std::vector<std::size_t>{};
  if (k > candidates.size()) return std::nullopt;

  Matcher m{host, candidates, pattern, degree_order(pattern), std::vector<std::size_t>(k),
            std::vector<bool>(candidates.size(), false)};
  if (!anchor) {
    if (m.extend(0)) return m.image;
    return std::nullopt;
  }

  auto it = std::find(candidates.begin(), candidates.end(), *anchor);
  if (it == candidates.end()) throw ContractError("anchor is not among the candidates");
  const auto anchor_pos = static_cast<std::size_t>(it - candidates.begin());
  const auto base_order = m.order;
  for (std::size_t p : base_order) {
    m.order.clear();
    m.order.push_back(p);
    for (std::size_t q : base_order)
      if (q != p) m.order.push_back(q);
    std::fill(m.used.begin(), m.used.end(), false);
    m.used[anchor_pos] = true;
    m.image[p] = *anchor;
    if (m.extend(1)) return m.image;
  }
  return std::nullopt;
}

bool is_pattern_free(const FiniteGraph& host, std::span<const std::size_t> vertices,
                     const FiniteGraph& pattern) {
  return !find_induced_copy(host, vertices, pattern).has_value();
}

bool is_pattern_free_exhaustive(const FiniteGraph& host, std::span<const std::size_t> vertices,
                                const FiniteGraph& pattern) {
  const std::size_t k = pattern.order();
  if (k == 0) return false;
  if (k > vertices.size()) return true;
  const std::string target = canonical_form(pattern);
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = vertices[pick[i]];
    if (canonical_form(host.induced(chosen)) == target) return false;
    // next k-combination of [0, |vertices|)
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == vertices.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace rado
