#include "rado/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rado {

namespace {

std::string exhausted_message(std::size_t block, Vertex scan, Vertex bound) {
  return "prefix exhausted at block " + std::to_string(block) + " (scan position " + std::to_string(scan) +
         ", prefix bound " + std::to_string(bound) + ")";
}

const char* reason_text(Pi02Failure::Reason r) {
  return r == Pi02Failure::Reason::empty_type_class ? "type class empty before forcing"
                                                    : "forcing failed";
}

std::string pi02_message(std::size_t level, Pi02Failure::Reason r, Vertex prev, double expected, Vertex bound) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s at level %zu within prefix %llu (k_prev = %llu, expected isolated candidates %.6g)",
                reason_text(r), level, static_cast<unsigned long long>(bound), static_cast<unsigned long long>(prev),
                expected);
  return buf;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

PrefixExhausted::PrefixExhausted(std::size_t block, Vertex scan_position, Vertex prefix_bound)
    : std::runtime_error(exhausted_message(block, scan_position, prefix_bound)),
      block_(block),
      scan_position_(scan_position) {}

Pi02Failure::Pi02Failure(std::size_t level, Reason reason, Vertex previous_threshold, double expected_candidates,
                         Vertex prefix_bound)
    : std::runtime_error(pi02_message(level, reason, previous_threshold, expected_candidates, prefix_bound)),
      level_(level),
      reason_(reason),
      expected_(expected_candidates) {}

double placement_probability(std::size_t placed, std::size_t length) {
  const double exponent = static_cast<double>(placed * length) + static_cast<double>(length * (length - (length ? 1 : 0)) / 2);
  return std::exp2(-exponent);
}

ThickConstruction construct_thick_copy(const EdgeOracle& oracle, const FiniteGraph& target, std::size_t blocks,
                                       Vertex prefix_bound) {
  if (blocks < 1) throw ContractError("at least one block is required");
  const std::size_t needed = blocks * (blocks + 1) / 2;
  if (target.order() < needed) {
    throw ContractError("target supplies " + std::to_string(target.order()) + " vertices, blocks need " +
                        std::to_string(needed));
  }
  ThickConstruction out;
  Vertex next_start = 1;
  for (std::size_t j = 1; j <= blocks; ++j) {
    const std::size_t base = out.images.size();  // target index of the block's first vertex
    bool placed = false;
    for (Vertex s = next_start; s + j - 1 <= prefix_bound; ++s) {
      ++out.candidates_scanned;
      bool ok = true;
      for (std::size_t a = 0; a < j && ok; ++a) {
        const Vertex x = s + a;
        for (std::size_t i = 0; i < out.images.size() && ok; ++i)
          ok = oracle.edge_unchecked(x, out.images[i]) == target.has_edge(base + a, i);
        for (std::size_t b = 0; b < a && ok; ++b)
          ok = oracle.edge_unchecked(x, s + b) == target.has_edge(base + a, base + b);
      }
      if (!ok) continue;
      out.intervals.push_back({s, j});
      for (std::size_t a = 0; a < j; ++a) out.images.push_back(s + a);
      next_start = s + j;
      placed = true;
      break;
    }
    if (!placed) throw PrefixExhausted(j, next_start, prefix_bound);
  }

  // Certificates come from fresh oracle queries over every pair.
  bool ok = true;
  for (std::size_t i = 0; i < out.images.size() && ok; ++i)
    for (std::size_t k = i + 1; k < out.images.size() && ok; ++k)
      ok = oracle.edge(out.images[i], out.images[k]) == target.has_edge(i, k);
  for (std::size_t j = 0; j < out.intervals.size() && ok; ++j) {
    ok = out.intervals[j].length == j + 1 && (j == 0 || out.intervals[j].start > out.intervals[j - 1].last());
  }
  if (!ok) throw std::logic_error("thick construction failed re-verification");
  out.members = VertexSet(out.images, prefix_bound);
  out.verified = true;
  return out;
}

ThickConstruction construct_thick_edgeless(const EdgeOracle& oracle, std::size_t blocks, Vertex prefix_bound) {
  if (blocks < 1) throw ContractError("at least one block is required");
  auto out = construct_thick_copy(oracle, FiniteGraph(blocks * (blocks + 1) / 2), blocks, prefix_bound);
  if (induced_subgraph(oracle, out.members).edge_count() != 0 || thickness(out.members).length < blocks) {
    throw std::logic_error("thick edgeless set failed re-verification");
  }
  return out;
}

Pi02Member construct_pi02_member(const EdgeOracle& oracle, const FamilyDescriptor& family, std::size_t levels,
                                 Vertex prefix_bound) {
  Pi02Member out;
  out.family = family.name();
  std::vector<Vertex> chosen;  // F_1 ∪ ... ∪ F_{n-1}, increasing
  Vertex k_prev = 0;

  for (std::size_t n = 1; n <= levels; ++n) {
    // Type over [1, k_prev] that joins nothing.
    std::vector<Vertex> t_prime = chosen;
    const std::size_t before = t_prime.size();
    for (Vertex x = k_prev + 1; x <= prefix_bound; ++x) {
      bool isolated = true;
      for (Vertex y = 1; y <= k_prev && isolated; ++y) isolated = !oracle.edge_unchecked(x, y);
      if (isolated) t_prime.push_back(x);
    }
    const double expected =
        static_cast<double>(prefix_bound - std::min(prefix_bound, k_prev)) * std::exp2(-static_cast<double>(k_prev));
    if (t_prime.size() == before) {
      throw Pi02Failure(n, Pi02Failure::Reason::empty_type_class, k_prev, expected, prefix_bound);
    }
    const VertexSet t_set(std::move(t_prime), prefix_bound);
    const auto forced = family.force(n, t_set, prefix_bound);
    if (!forced) throw Pi02Failure(n, Pi02Failure::Reason::forcing_failed, k_prev, expected, prefix_bound);

    const Vertex k_n = std::max(*forced, k_prev + 1);
    std::vector<Vertex> block;
    for (Vertex v : t_set)
      if (v > k_prev && v <= k_n) block.push_back(v);
    chosen.insert(chosen.end(), block.begin(), block.end());
    out.blocks.push_back(std::move(block));
    out.thresholds.push_back(k_n);
    out.forced.push_back(*forced);
    k_prev = k_n;
  }

  out.members = VertexSet(chosen, prefix_bound);
  out.weight = weighted_sum(out.members, family.weight());

  // Re-derive every certificate from the members and raw oracle queries.
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < out.blocks.size(); ++b) block_of.insert(block_of.end(), out.blocks[b].size(), b);
  UnionFind uf(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    for (std::size_t j = i + 1; j < chosen.size(); ++j) {
      if (!oracle.edge(chosen[i], chosen[j])) continue;
      if (block_of[i] != block_of[j]) ++out.cross_block_edges;
      uf.unite(i, j);
    }
  }
  bool ok = out.cross_block_edges == 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    out.largest_component = std::max(out.largest_component, uf.size_of(i));
    ok = ok && block_of[uf.find(i)] == block_of[i];
  }
  for (std::size_t n = 1; n <= levels && ok; ++n) {
    const Vertex k_n = out.thresholds[n - 1];
    const auto again = family.force(n, out.members.truncated(k_n), k_n);
    ok = again.has_value() && *again == out.forced[n - 1];
  }
  if (!ok) throw std::logic_error("pi02 member failed re-verification");
  out.verified = true;
  return out;
}

}  // namespace rado
