#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado {

struct EmbedConfig {
  /// Required-type candidates scored per step, smallest first.
  std::size_t candidate_cap = 64;
  /// Number of smallest host vertices used to count type classes; 0 = whole host.
  std::size_t score_horizon = 0;
  /// false enables depth-1 backtracking on a dead end.
  bool fail_fast = true;
};

struct EmbedStep {
  std::size_t index = 0;  // 1-based target vertex
  TypeSpec required;
  Vertex chosen = 0;
  std::uint64_t score = 0;
};

/// Target vertex i (0-based) is mapped to images[i].
struct Embedding {
  FiniteGraph target;
  std::vector<Vertex> images;
  std::vector<EmbedStep> steps;
  std::size_t backtracks = 0;
};

/// No host vertex of the required type remained at some step.
class EmbedDeadEnd : public std::runtime_error {
 public:
  EmbedDeadEnd(std::size_t step, TypeSpec required, std::size_t remaining);
  std::size_t step() const noexcept { return step_; }
  const TypeSpec& required() const noexcept { return required_; }
  std::size_t remaining() const noexcept { return remaining_; }

 private:
  std::size_t step_;
  TypeSpec required_;
  std::size_t remaining_;
};

/// Type over the placed images whose bit i says the target joins vertex
/// next_index to vertex i+1. next_index is 1-based and must equal
/// images.size() + 1.
TypeSpec required_type(const FiniteGraph& target, std::span<const Vertex> images, std::size_t next_index);

/// Minimum, over all 2^(n) types over placed ∪ {m}, of the number of
/// remaining horizon vertices of that type. Recomputes from scratch.
std::uint64_t score_candidate(const EdgeOracle& oracle, const VertexSet& host, std::span<const Vertex> placed,
                              Vertex m, std::size_t score_horizon = 0);

/// Greedy placement in target vertex order; each step takes the required-type
/// candidate with the largest score, ties to the smallest vertex. The result
/// is re-verified pair by pair before it is returned.
Embedding embed_target(const EdgeOracle& oracle, const FiniteGraph& target, const VertexSet& host,
                       const EmbedConfig& cfg = {});

/// True iff every pair of images matches the target adjacency in the oracle
/// and the images are distinct members of the host.
bool verify_embedding(const EdgeOracle& oracle, const FiniteGraph& target, std::span<const Vertex> images,
                      const VertexSet& host);

}  // namespace rado
