#include <algorithm>
#include <array>
#include <map>

#include "rado/graph_core.hpp"

namespace rado {

namespace {

// Depth-first search over relabelings, building the column-major code one
// vertex at a time and abandoning any prefix already above the best code.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const FiniteGraph& g)
      : g_(g), n_(g.order()), total_bits_(static_cast<int>(n_ * (n_ - (n_ ? 1 : 0)) / 2)) {}

  std::uint32_t run() {
    if (n_ <= 1) return 0;
    descend(0, 0);
    return best_;
  }

 private:
  void descend(std::size_t depth, std::uint32_t code) {
    if (depth == n_) {
      if (!have_best_ || code < best_) {
        best_ = code;
        have_best_ = true;
      }
      return;
    }
    const int prefix_bits = static_cast<int>((depth + 1) * depth / 2);
    for (std::size_t v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint32_t next = code;
      for (std::size_t q = 0; q < depth; ++q) next = (next << 1) | (g_.has_edge(perm_[q], v) ? 1U : 0U);
      if (have_best_) {
        const std::uint32_t best_prefix = best_ >> (total_bits_ - prefix_bits);
        if (next > best_prefix) continue;
      }
      used_[v] = true;
      perm_[depth] = v;
      descend(depth + 1, next);
      used_[v] = false;
    }
  }

  const FiniteGraph& g_;
  std::size_t n_;
  int total_bits_;
  std::array<std::size_t, kMaxCanonicalOrder> perm_{};
  std::array<bool, kMaxCanonicalOrder> used_{};
  std::uint32_t best_ = 0;
  bool have_best_ = false;
};

std::string code_to_string(std::uint32_t code, int bits) {
  std::string s(static_cast<std::size_t>(bits), '0');
  for (int i = 0; i < bits; ++i)
    if ((code >> (bits - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

}  // namespace

std::string canonical_form(const FiniteGraph& g) {
  if (g.order() > kMaxCanonicalOrder) throw ContractError("canonicalization bound exceeded");
  const int bits = static_cast<int>(g.order() * (g.order() - (g.order() ? 1 : 0)) / 2);
  return code_to_string(CanonicalSearch(g).run(), bits);
}

FiniteGraph graph_from_upper_triangle(std::size_t order, std::string_view bits) {
  if (bits.size() != order * (order - (order ? 1 : 0)) / 2) {
    throw ContractError("bitstring length does not match order");
  }
  FiniteGraph g(order);
  std::size_t k = 0;
  for (std::size_t j = 1; j < order; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (bits[k] == '1') {
        g.set_edge(i, j);
      } else if (bits[k] != '0') {
        throw ParseError("bitstring must contain only 0 and 1", k);
      }
    }
  return g;
}

std::vector<FiniteGraph> enumerate_unlabeled(std::size_t k) {
  if (k < 1 || k > 7) throw ContractError("enumeration supports orders 1..7");
  // Every class on k vertices arises from a class on k-1 vertices plus one
  // vertex joined to some subset of the others.
  std::map<std::string, FiniteGraph> level{{canonical_form(FiniteGraph(1)), FiniteGraph(1)}};
  for (std::size_t order = 2; order <= k; ++order) {
    std::map<std::string, FiniteGraph> next;
    for (const auto& [form, base] : level) {
      for (std::uint32_t subset = 0; subset < (1U << (order - 1)); ++subset) {
        FiniteGraph g(order);
        for (auto [i, j] : base.edges()) g.set_edge(i, j);
        for (std::size_t i = 0; i + 1 < order; ++i)
          if ((subset >> i) & 1U) g.set_edge(i, order - 1);
        auto canon = canonical_form(g);
        if (!next.contains(canon)) next.emplace(canon, graph_from_upper_triangle(order, canon));
      }
    }
    level = std::move(next);
  }
  std::vector<FiniteGraph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

}  // namespace rado
