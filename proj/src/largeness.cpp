#include "rado/largeness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_set>

namespace rado {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

Vertex parse_vertex(std::string_view text, std::size_t offset) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("expected a positive integer, got '" + std::string(text) + "'",
                     offset + static_cast<std::size_t>(ptr - text.data()));
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

WeightFunction WeightFunction::power(double exponent) {
  if (!(exponent > 0.0 && exponent <= 1.0)) throw ContractError("power weight exponent must lie in (0,1]");
  if (exponent == 1.0) return reciprocal();
  return WeightFunction(Kind::power, exponent);
}

WeightFunction WeightFunction::parse(std::string_view text) {
  if (text == "reciprocal") return reciprocal();
  if (text.starts_with("power:")) {
    const std::string value(text.substr(6));
    std::size_t used = 0;
    double eps = 0.0;
    try {
      eps = std::stod(value, &used);
    } catch (const std::exception&) {
      throw ParseError("bad weight exponent '" + value + "'", 6);
    }
    if (used != value.size()) throw ParseError("bad weight exponent '" + value + "'", 6 + used);
    return power(eps);
  }
  throw ParseError("unknown weight '" + std::string(text) + "'", 0);
}

long double WeightFunction::operator()(Vertex n) const {
  if (n == 0) throw ContractError("weights are defined on positive integers");
  if (kind_ == Kind::reciprocal) return 1.0L / static_cast<long double>(n);
  return 1.0L / std::pow(static_cast<long double>(n), static_cast<long double>(exponent_));
}

std::string WeightFunction::name() const {
  if (kind_ == Kind::reciprocal) return "reciprocal";
  char buf[64];
  std::snprintf(buf, sizeof buf, "power:%.12g", exponent_);
  return buf;
}

std::vector<Vertex> dyadic_checkpoints(Vertex bound) {
  std::vector<Vertex> points;
  for (Vertex p = 2; p <= bound; p *= 2) {
    points.push_back(p);
    if (p > bound / 2) break;
  }
  if (bound >= 1 && (points.empty() || points.back() != bound)) points.push_back(bound);
  return points;
}

DensityReport density_profile(const VertexSet& set, const std::vector<Vertex>& checkpoints) {
  if (checkpoints.empty()) throw ContractError("empty checkpoint list");
  DensityReport report;
  std::size_t idx = 0;
  Vertex prev = 0;
  for (Vertex c : checkpoints) {
    if (c == 0 || c <= prev) throw ContractError("checkpoints must be positive and increasing");
    if (c > set.prefix_bound()) throw ContractError("checkpoint beyond the prefix bound");
    while (idx < set.size() && set[idx] <= c) ++idx;
    report.checkpoints.push_back(c);
    report.counts.push_back(idx);
    report.densities.push_back(static_cast<double>(idx) / static_cast<double>(c));
    prev = c;
  }
  report.sup_density = *std::max_element(report.densities.begin(), report.densities.end());
  report.final_density = report.densities.back();
  return report;
}

long double weighted_sum(const VertexSet& set, const WeightFunction& f) {
  CompensatedSum sum;
  for (Vertex n : set) sum.add(f(n));
  return sum.value();
}

Interval thickness(const VertexSet& set) {
  Interval best;
  std::size_t i = 0;
  while (i < set.size()) {
    std::size_t j = i;
    while (j + 1 < set.size() && set[j + 1] == set[j] + 1) ++j;
    const Vertex len = j - i + 1;
    if (len > best.length) best = {set[i], len};
    i = j + 1;
  }
  return best;
}

Progression longest_ap(const VertexSet& set) {
  if (set.size() > kMaxProgressionInput) throw ContractError("size bound exceeded for longest_ap");
  if (set.empty()) return {};
  Progression best{set[0], 0, 1};
  if (set.size() == 1) return best;

  const Vertex top = set.elements().back();
  const bool dense = top <= (Vertex{1} << 26);
  std::vector<bool> bitmap;
  std::unordered_set<Vertex> hashed;
  if (dense) {
    bitmap.assign(top + 1, false);
    for (Vertex v : set) bitmap[v] = true;
  } else {
    hashed.insert(set.begin(), set.end());
  }
  auto member = [&](Vertex v) { return v <= top && (dense ? bitmap[v] : hashed.contains(v)); };

  // Each maximal progression is walked once, from its first two terms, so
  // the total walking cost is bounded by the number of pairs.
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Vertex a = set[i];
      const Vertex d = set[j] - a;
      if (a > d && member(a - d)) continue;
      std::size_t len = 2;
      for (Vertex x = set[j]; x <= top - d && member(x + d); x += d) ++len;
      const Progression cand{a, d, len};
      if (cand.length > best.length ||
          (cand.length == best.length &&
           (cand.difference < best.difference || (cand.difference == best.difference && cand.start < best.start)))) {
        best = cand;
      }
    }
  }
  return best;
}

FamilyDescriptor FamilyDescriptor::power_substantial(double exponent) {
  auto w = WeightFunction::power(exponent);
  return FamilyDescriptor(w.kind() == WeightFunction::Kind::reciprocal ? "substantial" : w.name(), w);
}

FamilyDescriptor FamilyDescriptor::parse(std::string_view text) {
  if (text == "substantial") return substantial();
  if (text.starts_with("power:")) return power_substantial(WeightFunction::parse(text).exponent());
  throw ParseError("unknown family '" + std::string(text) + "'", 0);
}

std::optional<Vertex> FamilyDescriptor::force(std::size_t level, const VertexSet& prefix, Vertex horizon) const {
  // A sum that is exactly an integer in rational arithmetic must not pass
  // "> level" through rounding, so the threshold carries a tiny margin.
  const long double lvl = static_cast<long double>(level);
  const long double threshold = lvl + 1e-12L * std::max(1.0L, lvl);
  CompensatedSum sum;
  for (Vertex m : prefix) {
    if (m > horizon) break;
    sum.add(weight_(m));
    if (sum.value() > threshold) return m;
  }
  return std::nullopt;
}

std::string format_intervals(const VertexSet& set) {
  std::string out;
  std::size_t i = 0;
  while (i < set.size()) {
    std::size_t j = i;
    while (j + 1 < set.size() && set[j + 1] == set[j] + 1) ++j;
    if (!out.empty()) out.push_back(',');
    out += std::to_string(set[i]);
    if (j > i) out += "-" + std::to_string(set[j]);
    i = j + 1;
  }
  return out;
}

VertexSet parse_intervals(std::string_view text, Vertex prefix_bound) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = trim(text.substr(pos, comma - pos));
    if (!item.empty()) {
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) {
        out.push_back(parse_vertex(item, pos));
      } else {
        const Vertex a = parse_vertex(trim(item.substr(0, dash)), pos);
        const Vertex b = parse_vertex(trim(item.substr(dash + 1)), pos + dash + 1);
        if (a > b) throw ParseError("interval bounds out of order", pos);
        if (b > prefix_bound) throw ContractError("interval end " + std::to_string(b) + " exceeds prefix bound");
        for (Vertex x = a; x <= b; ++x) out.push_back(x);
      }
    } else if (comma != text.size() || pos != 0) {
      if (!text.empty()) throw ParseError("empty item in set notation", pos);
    }
    pos = comma + 1;
  }
  return VertexSet::from_unsorted(std::move(out), prefix_bound);
}

VertexSet parse_vertex_lines(std::string_view text, Vertex prefix_bound) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty() && line.front() != '#') out.push_back(parse_vertex(line, pos));
    pos = nl + 1;
  }
  return VertexSet::from_unsorted(std::move(out), prefix_bound);
}

}  // namespace rado
