#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

/// Vertices of the ambient graph are positive integers; 0 is never a vertex.
using Vertex = std::uint64_t;

/// Raised when a caller breaks an operation's precondition.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text decoders; carries the byte offset of the first bad input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl64(std::uint64_t x, int r) noexcept {
  return (x << r) | (x >> (64 - r));
}

/// Rational probability num/den with 0 < num <= den.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "a/b", an integer, or a decimal such as "0.25" into a Rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Parses a 64-bit seed given in decimal or 0x-hex.
std::uint64_t parse_seed(std::string_view text);

/// The fixed random graph on the positive integers. Immutable; every query is
/// a pure function of (seed, min(u,v), max(u,v), edge probability).
class EdgeOracle {
 public:
  explicit EdgeOracle(std::uint64_t seed, Rational edge_probability = {1, 2});

  std::uint64_t seed() const noexcept { return seed_; }
  const Rational& edge_probability() const noexcept { return probability_; }

  /// Throws ContractError when u == v or either endpoint is 0.
  bool edge(Vertex u, Vertex v) const {
    if (u == v || u == 0 || v == 0) throw_contract(u, v);
    return edge_unchecked(u, v);
  }

  bool edge_unchecked(Vertex u, Vertex v) const noexcept {
    const Vertex a = u < v ? u : v;
    const Vertex b = u < v ? v : u;
    const std::uint64_t h = mix64(seed_ ^ mix64((a * kGoldenGamma) ^ rotl64(b, 32)));
    const std::uint64_t top53 = h >> 11;
    // top53 / 2^53 < num / den, evaluated exactly.
    return static_cast<unsigned __int128>(top53) * probability_.den <
           (static_cast<unsigned __int128>(probability_.num) << 53);
  }

 private:
  [[noreturn]] static void throw_contract(Vertex u, Vertex v);

  std::uint64_t seed_;
  Rational probability_;
};

/// Finite simple undirected graph stored as a symmetric bit-matrix.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::size_t order);

  std::size_t order() const noexcept { return order_; }

  bool has_edge(std::size_t i, std::size_t j) const noexcept {
    return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1U;
  }
  /// Sets or clears {i,j}; self-loops are rejected.
  void set_edge(std::size_t i, std::size_t j, bool present = true);

  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {rows_.data() + i * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  std::size_t degree(std::size_t i) const noexcept;
  std::size_t edge_count() const noexcept;
  FiniteGraph complement() const;
  /// Graph induced on the listed vertex indices, in the given order.
  FiniteGraph induced(std::span<const std::size_t> vertices) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

  static FiniteGraph complete(std::size_t n);
  static FiniteGraph empty(std::size_t n) { return FiniteGraph(n); }
  static FiniteGraph path(std::size_t n);
  static FiniteGraph cycle(std::size_t n);
  static FiniteGraph petersen();

 private:
  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Strictly increasing set of positive integers, all at most prefix_bound.
class VertexSet {
 public:
  VertexSet() = default;
  /// Validates ordering and bounds; throws ContractError otherwise.
  VertexSet(std::vector<Vertex> elements, Vertex prefix_bound);
  /// Sorts and deduplicates first.
  static VertexSet from_unsorted(std::vector<Vertex> elements, Vertex prefix_bound);
  static VertexSet interval(Vertex first, Vertex last, Vertex prefix_bound);
  static VertexSet interval(Vertex first, Vertex last) { return interval(first, last, last); }

  const std::vector<Vertex>& elements() const noexcept { return elements_; }
  Vertex prefix_bound() const noexcept { return prefix_bound_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Vertex operator[](std::size_t i) const noexcept { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(Vertex v) const noexcept;
  /// Elements <= bound, keeping the same prefix bound.
  VertexSet truncated(Vertex bound) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> elements_;
  Vertex prefix_bound_ = 0;
};

/// A type over an ordered base list: bit i says "joined to base[i]".
struct TypeSpec {
  std::vector<Vertex> base;
  std::vector<bool> mask;

  /// Mask packed little-endian into an integer; requires |base| <= 64.
  std::uint64_t mask_bits() const;
  /// Mask as a '0'/'1' string, base order.
  std::string mask_string() const;

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;
};

TypeSpec type_of(const EdgeOracle& oracle, Vertex m, std::span<const Vertex> base);
/// Elements of pool (minus the base) whose type over t.base equals t.
VertexSet vertices_of_type(const EdgeOracle& oracle, const TypeSpec& t, const VertexSet& pool);
/// True iff m realises t; m must lie outside t.base.
bool has_type(const EdgeOracle& oracle, Vertex m, const TypeSpec& t);

struct ExtensionReport {
  std::vector<Vertex> base;
  Vertex bound = 0;
  /// Indexed by packed mask; least witness in [1,bound] outside base.
  std::vector<std::optional<Vertex>> witnesses;
  bool pass = false;
  std::size_t missing() const;
};

/// Least witness for every type over F (|F| <= 24).
ExtensionReport extension_check(const EdgeOracle& oracle, const VertexSet& base, Vertex bound);

/// Vertex i of the result is the i-th smallest element of A.
FiniteGraph induced_subgraph(const EdgeOracle& oracle, const VertexSet& vertices);
FiniteGraph induced_subgraph(const EdgeOracle& oracle, std::span<const Vertex> vertices);

inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Lexicographically least column-major upper-triangle bitstring over all
/// relabelings. Throws ContractError above kMaxCanonicalOrder vertices.
std::string canonical_form(const FiniteGraph& g);
/// Graph whose column-major upper triangle is the given bitstring.
FiniteGraph graph_from_upper_triangle(std::size_t order, std::string_view bits);

/// One representative per isomorphism class on k vertices, 1 <= k <= 7,
/// sorted by canonical form.
std::vector<FiniteGraph> enumerate_unlabeled(std::size_t k);

FiniteGraph graph6_decode(std::string_view text);
std::string graph6_encode(const FiniteGraph& g);

}  // namespace rado
