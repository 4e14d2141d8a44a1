#include "rado/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace rado {

namespace {

std::uint64_t parse_u64(std::string_view text, int base, std::string_view what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value, base);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'",
                     static_cast<std::size_t>(ptr - first));
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Rational r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_u64(text.substr(0, slash), 10, "probability numerator");
    r.den = parse_u64(text.substr(slash + 1), 10, "probability denominator");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 18) throw ParseError("too many decimal digits", dot + 19);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, 10, "probability");
    const std::uint64_t f = frac.empty() ? 0 : parse_u64(frac, 10, "probability");
    r.num = w * den + f;
    r.den = den;
  } else {
    r.num = parse_u64(text, 10, "probability");
    r.den = 1;
  }
  if (r.den == 0 || r.num == 0 || r.num > r.den) {
    throw ContractError("edge probability must lie in (0,1], got " + std::string(text));
  }
  const std::uint64_t g = std::gcd(r.num, r.den);
  r.num /= g;
  r.den /= g;
  return r;
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::uint64_t parse_seed(std::string_view text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    return parse_u64(text.substr(2), 16, "seed");
  }
  return parse_u64(text, 10, "seed");
}

EdgeOracle::EdgeOracle(std::uint64_t seed, Rational edge_probability)
    : seed_(seed), probability_(edge_probability) {
  if (probability_.den == 0 || probability_.num == 0 || probability_.num > probability_.den) {
    throw ContractError("edge probability must lie in (0,1]");
  }
}

void EdgeOracle::throw_contract(Vertex u, Vertex v) {
  if (u == v) throw ContractError("edge query on a single vertex " + std::to_string(u));
  throw ContractError("vertices are positive integers, got 0");
}

// ---------------------------------------------------------------------------

FiniteGraph::FiniteGraph(std::size_t order)
    : order_(order), words_((order + 63) / 64), rows_(order * words_, 0) {}

void FiniteGraph::set_edge(std::size_t i, std::size_t j, bool present) {
  if (i == j) throw ContractError("self-loop on vertex " + std::to_string(i));
  if (i >= order_ || j >= order_) throw ContractError("vertex index out of range");
  const std::uint64_t bi = std::uint64_t{1} << (i & 63);
  const std::uint64_t bj = std::uint64_t{1} << (j & 63);
  if (present) {
    rows_[i * words_ + (j >> 6)] |= bj;
    rows_[j * words_ + (i >> 6)] |= bi;
  } else {
    rows_[i * words_ + (j >> 6)] &= ~bj;
    rows_[j * words_ + (i >> 6)] &= ~bi;
  }
}

std::size_t FiniteGraph::degree(std::size_t i) const noexcept {
  std::size_t d = 0;
  for (auto w : row(i)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t FiniteGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < order_; ++i) total += degree(i);
  return total / 2;
}

FiniteGraph FiniteGraph::complement() const {
  FiniteGraph c(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (!has_edge(i, j)) c.set_edge(i, j);
  return c;
}

FiniteGraph FiniteGraph::induced(std::span<const std::size_t> vertices) const {
  FiniteGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) g.set_edge(i, j);
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

FiniteGraph FiniteGraph::complete(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j);
  return g;
}

FiniteGraph FiniteGraph::path(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

FiniteGraph FiniteGraph::cycle(std::size_t n) {
  if (n < 3) throw ContractError("cycle needs at least 3 vertices");
  FiniteGraph g = path(n);
  g.set_edge(n - 1, 0);
  return g;
}

FiniteGraph FiniteGraph::petersen() {
  FiniteGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.set_edge(i, (i + 1) % 5);          // outer cycle
    g.set_edge(i, i + 5);                // spokes
    g.set_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

// ---------------------------------------------------------------------------

VertexSet::VertexSet(std::vector<Vertex> elements, Vertex prefix_bound)
    : elements_(std::move(elements)), prefix_bound_(prefix_bound) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0) throw ContractError("vertex sets hold positive integers only");
    if (elements_[i] > prefix_bound_) {
      throw ContractError("element " + std::to_string(elements_[i]) + " exceeds prefix bound " +
                          std::to_string(prefix_bound_));
    }
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw ContractError("vertex set elements must be strictly increasing");
    }
  }
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> elements, Vertex prefix_bound) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return VertexSet(std::move(elements), prefix_bound);
}

VertexSet VertexSet::interval(Vertex first, Vertex last, Vertex prefix_bound) {
  std::vector<Vertex> v;
  if (first <= last) {
    v.reserve(last - first + 1);
    for (Vertex x = first; x <= last; ++x) v.push_back(x);
  }
  return VertexSet(std::move(v), prefix_bound);
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

VertexSet VertexSet::truncated(Vertex bound) const {
  auto end = std::upper_bound(elements_.begin(), elements_.end(), bound);
  return VertexSet(std::vector<Vertex>(elements_.begin(), end), prefix_bound_);
}

// ---------------------------------------------------------------------------

std::uint64_t TypeSpec::mask_bits() const {
  if (mask.size() > 64) throw ContractError("type mask wider than 64 bits");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) bits |= std::uint64_t{1} << i;
  return bits;
}

std::string TypeSpec::mask_string() const {
  std::string s;
  s.reserve(mask.size());
  for (bool b : mask) s.push_back(b ? '1' : '0');
  return s;
}

TypeSpec type_of(const EdgeOracle& oracle, Vertex m, std::span<const Vertex> base) {
  TypeSpec t;
  t.base.assign(base.begin(), base.end());
  t.mask.reserve(base.size());
  for (Vertex b : base) {
    if (b == m) throw ContractError("vertex inside base");
    t.mask.push_back(oracle.edge(m, b));
  }
  return t;
}

bool has_type(const EdgeOracle& oracle, Vertex m, const TypeSpec& t) {
  for (std::size_t i = 0; i < t.base.size(); ++i) {
    if (t.base[i] == m) throw ContractError("vertex inside base");
    if (oracle.edge(m, t.base[i]) != t.mask[i]) return false;
  }
  return true;
}

VertexSet vertices_of_type(const EdgeOracle& oracle, const TypeSpec& t, const VertexSet& pool) {
  if (t.mask.size() != t.base.size()) throw ContractError("type mask length differs from base");
  std::vector<Vertex> sorted_base(t.base);
  std::sort(sorted_base.begin(), sorted_base.end());
  std::vector<Vertex> out;
  for (Vertex m : pool) {
    if (std::binary_search(sorted_base.begin(), sorted_base.end(), m)) continue;
    if (has_type(oracle, m, t)) out.push_back(m);
  }
  return VertexSet(std::move(out), pool.prefix_bound());
}

std::size_t ExtensionReport::missing() const {
  return static_cast<std::size_t>(
      std::count_if(witnesses.begin(), witnesses.end(), [](const auto& w) { return !w; }));
}

ExtensionReport extension_check(const EdgeOracle& oracle, const VertexSet& base, Vertex bound) {
  if (base.size() > 24) throw ContractError("extension check supports |F| <= 24");
  if (!base.empty() && base.elements().back() > bound) {
    throw ContractError("base must lie inside [1, bound]");
  }
  ExtensionReport report;
  report.base = base.elements();
  report.bound = bound;
  const std::size_t types = std::size_t{1} << base.size();
  report.witnesses.assign(types, std::nullopt);
  std::size_t found = 0;
  for (Vertex m = 1; m <= bound && found < types; ++m) {
    if (base.contains(m)) continue;
    std::size_t mask = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (oracle.edge_unchecked(m, base[i])) mask |= std::size_t{1} << i;
    if (!report.witnesses[mask]) {
      report.witnesses[mask] = m;
      ++found;
    }
  }
  report.pass = found == types;
  return report;
}

FiniteGraph induced_subgraph(const EdgeOracle& oracle, std::span<const Vertex> vertices) {
  FiniteGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (oracle.edge(vertices[i], vertices[j])) g.set_edge(i, j);
  return g;
}

FiniteGraph induced_subgraph(const EdgeOracle& oracle, const VertexSet& vertices) {
  return induced_subgraph(oracle, std::span<const Vertex>(vertices.elements()));
}

}  // namespace rado
