#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rado/graph_core.hpp"
#include "rado/largeness.hpp"

namespace rado {

/// The scan ran past the prefix bound before block `block` was placed.
class PrefixExhausted : public std::runtime_error {
 public:
  PrefixExhausted(std::size_t block, Vertex scan_position, Vertex prefix_bound);
  std::size_t block() const noexcept { return block_; }
  Vertex scan_position() const noexcept { return scan_position_; }

 private:
  std::size_t block_;
  Vertex scan_position_;
};

struct ThickConstruction {
  std::vector<Interval> intervals;  // |intervals[j-1]| = j
  VertexSet members;                // union of the intervals
  /// Images in target order: the concatenated intervals.
  std::vector<Vertex> images;
  std::uint64_t candidates_scanned = 0;
  bool verified = false;
};

/// Probability that one candidate interval of length n works against a
/// fixed set F of already placed vertices, for a prescribed target pattern.
double placement_probability(std::size_t placed, std::size_t length);

/// Blocks I_1..I_m with |I_j| = j, I_1 = {1}, each placed at the least start
/// beyond the previous block such that the union spans no edge. Verified by
/// querying every pair of the union.
ThickConstruction construct_thick_edgeless(const EdgeOracle& oracle, std::size_t blocks, Vertex prefix_bound);

/// Same scan, but the concatenated blocks must induce target[0..m(m+1)/2).
ThickConstruction construct_thick_copy(const EdgeOracle& oracle, const FiniteGraph& target, std::size_t blocks,
                                       Vertex prefix_bound);

/// Recursion failed at `level`: either no vertex of the isolating type was
/// left, or the family's forcing oracle found no cylinder inside the prefix.
class Pi02Failure : public std::runtime_error {
 public:
  enum class Reason { empty_type_class, forcing_failed };
  Pi02Failure(std::size_t level, Reason reason, Vertex previous_threshold, double expected_candidates,
              Vertex prefix_bound);
  std::size_t level() const noexcept { return level_; }
  Reason reason() const noexcept { return reason_; }
  /// Analytic expectation of the isolating-type class size, N / 2^{k_{n-1}}.
  double expected_candidates() const noexcept { return expected_; }

 private:
  std::size_t level_;
  Reason reason_;
  double expected_;
};

struct Pi02Member {
  std::string family;
  std::vector<std::vector<Vertex>> blocks;  // F_1..F_n
  std::vector<Vertex> thresholds;           // k_1..k_n
  std::vector<Vertex> forced;               // k' returned by the forcing oracle per level
  VertexSet members;                        // A = union of blocks
  long double weight = 0;                   // weight of A under the family
  std::uint64_t cross_block_edges = 0;
  std::size_t largest_component = 0;
  bool verified = false;
};

/// Builds a member of the family whose connected components are confined to
/// single blocks. Certificates are recomputed from oracle queries: cross-block
/// edges are counted exhaustively, components come from union-find over all
/// pairs of A, and each level's cylinder is re-forced.
Pi02Member construct_pi02_member(const EdgeOracle& oracle, const FamilyDescriptor& family, std::size_t levels,
                                 Vertex prefix_bound);

}  // namespace rado
