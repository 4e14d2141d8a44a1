#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado {

/// Closed-form weights: reciprocal is f(n) = 1/n, power(eps) is 1/n^eps.
class WeightFunction {
 public:
  enum class Kind { reciprocal, power };

  static WeightFunction reciprocal() { return WeightFunction(Kind::reciprocal, 1.0); }
  /// eps must lie in (0,1].
  static WeightFunction power(double exponent);
  /// "reciprocal" or "power:<eps>".
  static WeightFunction parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return exponent_; }
  long double operator()(Vertex n) const;
  std::string name() const;

 private:
  WeightFunction(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}

  Kind kind_;
  double exponent_;
};

struct DensityReport {
  std::vector<Vertex> checkpoints;
  std::vector<std::size_t> counts;
  std::vector<double> densities;
  double sup_density = 0.0;
  double final_density = 0.0;
};

/// Dyadic points 2,4,8,... up to bound, plus bound itself when it is not a power of two.
std::vector<Vertex> dyadic_checkpoints(Vertex bound);

/// Exact prefix counts |A ∩ [1,n]| at each checkpoint. The sup over
/// checkpoints is a finite estimate of upper density, not its lim sup.
DensityReport density_profile(const VertexSet& set, const std::vector<Vertex>& checkpoints);

/// Compensated sum of f(n) over the set, ascending order.
long double weighted_sum(const VertexSet& set, const WeightFunction& f);

struct Interval {
  Vertex start = 0;
  Vertex length = 0;
  Vertex last() const noexcept { return start + length - 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Leftmost longest run of consecutive integers inside the set.
Interval thickness(const VertexSet& set);

struct Progression {
  Vertex start = 0;
  Vertex difference = 0;
  std::size_t length = 0;
  friend bool operator==(const Progression&, const Progression&) = default;
};

inline constexpr std::size_t kMaxProgressionInput = 5000;

/// Longest arithmetic progression in the set; ties go to the smallest
/// difference, then the smallest start. A singleton reports difference 0.
Progression longest_ap(const VertexSet& set);

/// A Pi^0_2 family given by weight-sum open sets
/// U_n = { A : sum_{m in A} f(m) > n }.
class FamilyDescriptor {
 public:
  static FamilyDescriptor substantial() { return FamilyDescriptor("substantial", WeightFunction::reciprocal()); }
  static FamilyDescriptor power_substantial(double exponent);
  /// "substantial" or "power:<eps>".
  static FamilyDescriptor parse(std::string_view text);

  const std::string& name() const noexcept { return name_; }
  const WeightFunction& weight() const noexcept { return weight_; }

  /// Least k' <= horizon such that the weight of prefix ∩ [1,k'] exceeds
  /// level; then the cylinder <prefix ∩ [1,k'], k'> lies inside U_level.
  std::optional<Vertex> force(std::size_t level, const VertexSet& prefix, Vertex horizon) const;

 private:
  FamilyDescriptor(std::string name, WeightFunction weight) : name_(std::move(name)), weight_(weight) {}

  std::string name_;
  WeightFunction weight_;
};

inline std::optional<Vertex> pi02_force(const FamilyDescriptor& family, std::size_t level,
                                        const VertexSet& prefix, Vertex horizon) {
  return family.force(level, prefix, horizon);
}

/// Run-length notation "a-b,c,d-e".
std::string format_intervals(const VertexSet& set);
/// Parses run-length notation; every element must be <= prefix_bound.
VertexSet parse_intervals(std::string_view text, Vertex prefix_bound);
/// Newline-separated decimal integers; blank lines and '#' comments skipped.
VertexSet parse_vertex_lines(std::string_view text, Vertex prefix_bound);

}  // namespace rado
