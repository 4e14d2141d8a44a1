#include "rado/embed.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace rado {

namespace {

std::string dead_end_message(std::size_t step, const TypeSpec& required, std::size_t remaining) {
  return "dead end at step " + std::to_string(step) + ": no host vertex of type " +
         (required.mask.empty() ? std::string("<empty>") : required.mask_string()) + " among " +
         std::to_string(remaining) + " remaining";
}

constexpr std::size_t kMaskWidth = 63;

std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

struct Ranked {
  std::uint64_t score;
  std::size_t host_index;
};

// Incremental bookkeeping for the greedy recursion: every host vertex keeps
// its packed type over the placed images, and the horizon pool keeps one
// counter per type.
class EmbedState {
 public:
  EmbedState(const EdgeOracle& oracle, const VertexSet& host, const EmbedConfig& cfg)
      : oracle_(oracle),
        host_(host),
        pool_size_(cfg.score_horizon == 0 ? host.size() : std::min(cfg.score_horizon, host.size())),
        pool_unplaced_(pool_size_),
        type_id_(host.size(), 0),
        placed_(host.size(), 0) {}

  std::size_t placed_count() const noexcept { return images_.size(); }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  bool matches(std::size_t idx, const TypeSpec& required) const {
    const std::size_t n = images_.size();
    if (n <= kMaskWidth) return (type_id_[idx] & low_mask(n)) == required.mask_bits();
    return has_type(oracle_, host_[idx], required);
  }

  std::vector<std::size_t> candidates(const TypeSpec& required, std::size_t cap) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < host_.size() && out.size() < cap; ++i)
      if (!placed_[i] && matches(i, required)) out.push_back(i);
    return out;
  }

  std::size_t unplaced() const noexcept { return host_.size() - images_.size(); }

  std::uint64_t score(std::size_t cand) const {
    const std::size_t n = images_.size() + 1;  // types over placed ∪ {m}
    const std::size_t pool_remaining = pool_unplaced_ - (cand < pool_size_ ? 1 : 0);
    if (n > kMaskWidth || (std::uint64_t{1} << n) > pool_remaining) return 0;

    // counts[2t + e]: pool vertices of old type t, e = adjacency to m.
    const std::uint64_t keep = low_mask(n - 1);
    std::vector<std::uint64_t> counts(std::size_t{2} << (n - 1), 0);
    const Vertex m = host_[cand];
    for (std::size_t i = 0; i < pool_size_; ++i) {
      if (placed_[i] || i == cand) continue;
      counts[((type_id_[i] & keep) << 1) | static_cast<std::uint64_t>(oracle_.edge_unchecked(host_[i], m))]++;
    }
    return *std::min_element(counts.begin(), counts.end());
  }

  void place(std::size_t idx) {
    const std::size_t bit = images_.size();
    const Vertex m = host_[idx];
    placed_[idx] = 1;
    if (idx < pool_size_) --pool_unplaced_;
    images_.push_back(m);
    placed_index_.push_back(idx);
    if (bit >= kMaskWidth) return;
    const std::uint64_t flag = std::uint64_t{1} << bit;
    for (std::size_t i = 0; i < host_.size(); ++i) {
      if (placed_[i]) continue;
      const std::uint64_t joined = oracle_.edge_unchecked(host_[i], m) ? flag : 0;
      type_id_[i] = (type_id_[i] & ~flag) | joined;
    }
  }

  void unplace_last() {
    placed_[placed_index_.back()] = 0;
    if (placed_index_.back() < pool_size_) ++pool_unplaced_;
    placed_index_.pop_back();
    images_.pop_back();
  }

 private:
  const EdgeOracle& oracle_;
  const VertexSet& host_;
  std::size_t pool_size_;
  std::size_t pool_unplaced_;
  std::vector<std::uint64_t> type_id_;
  std::vector<std::uint8_t> placed_;
  std::vector<Vertex> images_;
  std::vector<std::size_t> placed_index_;
};

}  // namespace

EmbedDeadEnd::EmbedDeadEnd(std::size_t step, TypeSpec required, std::size_t remaining)
    : std::runtime_error(dead_end_message(step, required, remaining)),
      step_(step),
      required_(std::move(required)),
      remaining_(remaining) {}

TypeSpec required_type(const FiniteGraph& target, std::span<const Vertex> images, std::size_t next_index) {
  if (next_index != images.size() + 1) throw ContractError("index mismatch: next_index must be |placed| + 1");
  if (next_index > target.order()) throw ContractError("index mismatch: target has no vertex " + std::to_string(next_index));
  TypeSpec t;
  t.base.assign(images.begin(), images.end());
  t.mask.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) t.mask.push_back(target.has_edge(next_index - 1, i));
  return t;
}

std::uint64_t score_candidate(const EdgeOracle& oracle, const VertexSet& host, std::span<const Vertex> placed,
                              Vertex m, std::size_t score_horizon) {
  const std::size_t horizon = score_horizon == 0 ? host.size() : std::min(score_horizon, host.size());
  const std::unordered_set<Vertex> taken(placed.begin(), placed.end());
  std::vector<Vertex> pool;
  for (std::size_t i = 0; i < horizon; ++i)
    if (host[i] != m && !taken.contains(host[i])) pool.push_back(host[i]);

  const std::size_t n = placed.size() + 1;
  if (n > kMaskWidth || (std::uint64_t{1} << n) > pool.size()) return 0;
  std::vector<Vertex> base(placed.begin(), placed.end());
  base.push_back(m);
  std::vector<std::uint64_t> counts(std::size_t{1} << n, 0);
  for (Vertex x : pool) ++counts[type_of(oracle, x, base).mask_bits()];
  return *std::min_element(counts.begin(), counts.end());
}

bool verify_embedding(const EdgeOracle& oracle, const FiniteGraph& target, std::span<const Vertex> images,
                      const VertexSet& host) {
  if (images.size() != target.order()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!host.contains(images[i])) return false;
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return false;
      if (oracle.edge(images[i], images[j]) != target.has_edge(i, j)) return false;
    }
  }
  return true;
}

Embedding embed_target(const EdgeOracle& oracle, const FiniteGraph& target, const VertexSet& host,
                       const EmbedConfig& cfg) {
  if (cfg.candidate_cap == 0) throw ContractError("candidate_cap must be at least 1");
  Embedding result;
  result.target = target;
  EmbedState state(oracle, host, cfg);

  // Ranked alternatives per step, best first; consumed from the front.
  std::vector<std::vector<Ranked>> alternatives;
  std::vector<EmbedStep> steps;

  std::size_t n = 1;
  while (n <= target.order()) {
    TypeSpec required = required_type(target, state.images(), n);
    auto cands = state.candidates(required, cfg.candidate_cap);
    if (cands.empty()) {
      const bool can_retry = !cfg.fail_fast && n >= 2 && alternatives.back().size() > 1;
      if (!can_retry) throw EmbedDeadEnd(n, std::move(required), state.unplaced());
      // Depth-1 backtrack: swap the previous step for its next-best choice.
      state.unplace_last();
      auto& alt = alternatives.back();
      alt.erase(alt.begin());
      steps.back().chosen = host[alt.front().host_index];
      steps.back().score = alt.front().score;
      state.place(alt.front().host_index);
      ++result.backtracks;
      continue;
    }
    std::vector<Ranked> ranked;
    ranked.reserve(cands.size());
    for (std::size_t c : cands) ranked.push_back({state.score(c), c});
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Ranked& a, const Ranked& b) { return a.score > b.score; });
    state.place(ranked.front().host_index);
    steps.push_back({n, std::move(required), host[ranked.front().host_index], ranked.front().score});
    alternatives.push_back(std::move(ranked));
    ++n;
  }

  result.images = state.images();
  result.steps = std::move(steps);
  if (!verify_embedding(oracle, target, result.images, host)) {
    throw std::logic_error("embedding failed pairwise re-verification");
  }
  return result;
}

}  // namespace rado
