#include "rado/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include "rado/audit.hpp"
#include "rado/constructions.hpp"
#include "rado/embed.hpp"
#include "rado/largeness.hpp"
#include "rado/mc.hpp"

namespace rado::cli {

using json = nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json num(double x) { return std::stod(format_real(x)); }
json num(long double x) { return num(static_cast<double>(x)); }

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.emplace_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

Vertex to_vertex(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw ParseError("trailing characters in '" + s + "'", used);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("expected an integer, got '" + s + "'", 0);
  }
}

json vertices_json(std::span<const Vertex> v) { return json(std::vector<Vertex>(v.begin(), v.end())); }

json interval_json(const Interval& i) { return json{{"start", i.start}, {"length", i.length}}; }

// ---------------------------------------------------------------------------

struct Common {
  std::string seed_text = "0";
  std::string probability = "1/2";
  Vertex prefix_bound = 0;
  std::string output;

  std::uint64_t seed() const { return parse_seed(seed_text); }
  EdgeOracle oracle() const { return EdgeOracle(seed(), parse_rational(probability)); }
};

struct Outcome {
  json report;
  int code = kOk;
};

using Handler = std::function<Outcome()>;

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed_text, "64-bit seed, decimal or 0x-hex")->envname("RADO_SEED");
  sub->add_option("--p", c.probability, "edge probability of the ambient graph (a/b or decimal)");
  sub->add_option("--prefix-bound", c.prefix_bound, "largest materialized vertex N (0 = infer)");
  sub->add_option("-o,--output", c.output, "write the report here instead of stdout");
}

json config_of(const CLI::App* sub) {
  json cfg = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "output") continue;
    if (opt->get_expected_max() == 0) {
      cfg[name] = opt->count() > 0;
      continue;
    }
    if (opt->count() > 0) {
      const auto& res = opt->results();
      std::string joined;
      for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
      cfg[name] = joined;
    } else {
      cfg[name] = opt->get_default_str();
    }
  }
  return cfg;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split(text, ','))
    if (!item.empty()) out.push_back(static_cast<std::size_t>(to_vertex(item)));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

VertexSet parse_host(std::string_view text, Vertex prefix_bound, std::uint64_t seed) {
  const auto items = split(text, ',');
  std::vector<Vertex> explicit_values;
  bool needs_bound = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (it == "all" || it == "even" || it == "odd" || it.starts_with("mup:")) {
      needs_bound = true;
    } else if (it.starts_with("ap:")) {
      needs_bound = true;
      ++i;
    } else if (it.starts_with("file:")) {
      break;
    } else if (!it.empty()) {
      const auto dash = it.find('-');
      explicit_values.push_back(to_vertex(dash == std::string::npos ? it : it.substr(dash + 1)));
    }
  }
  Vertex bound = prefix_bound;
  if (bound == 0) {
    if (needs_bound) throw ContractError("--prefix-bound is required for all/even/odd/ap/mup host sets");
    for (Vertex v : explicit_values) bound = std::max(bound, v);
  }

  std::vector<Vertex> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string& it = items[i];
    if (it == "all" || it == "even" || it == "odd") {
      const Vertex first = it == "even" ? 2 : 1;
      const Vertex step = it == "all" ? 1 : 2;
      for (Vertex v = first; v <= bound; v += step) out.push_back(v);
    } else if (it.starts_with("ap:")) {
      if (i + 1 >= items.size()) throw ParseError("ap: needs a start and a difference", text.size());
      const Vertex a = to_vertex(it.substr(3));
      const Vertex d = to_vertex(items[++i]);
      if (a == 0 || d == 0) throw ContractError("ap: start and difference must be positive");
      for (Vertex v = a; v <= bound; v += d) out.push_back(v);
    } else if (it.starts_with("mup:")) {
      const double p = std::stod(it.substr(4));
      const auto s = sample_mu_p(p, bound, seed);
      out.insert(out.end(), s.begin(), s.end());
    } else if (it.starts_with("file:")) {
      // The path is everything after "file:", commas included.
      const std::string path(text.substr(text.find("file:") + 5));
      const std::string body = read_file(path);
      std::vector<Vertex> from_file;
      for (const auto& line : split(body, '\n')) {
        auto l = line;
        while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.pop_back();
        if (l.empty() || l[0] == '#') continue;
        for (Vertex v : parse_intervals(l, ~Vertex{0})) from_file.push_back(v);
      }
      if (prefix_bound == 0)
        for (Vertex v : from_file) bound = std::max(bound, v);
      out.insert(out.end(), from_file.begin(), from_file.end());
      break;
    } else if (!it.empty()) {
      for (Vertex v : parse_intervals(it, bound)) out.push_back(v);
    }
  }
  return VertexSet::from_unsorted(std::move(out), bound);
}

FiniteGraph parse_pattern(std::string_view text) {
  static const std::regex named(R"(([KPCE])(\d+))");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, named)) {
    const auto n = static_cast<std::size_t>(std::stoul(m[2]));
    switch (m[1].str()[0]) {
      case 'K':
        return FiniteGraph::complete(n);
      case 'P':
        return FiniteGraph::path(n);
      case 'C':
        return FiniteGraph::cycle(n);
      default:
        return FiniteGraph::empty(n);
    }
  }
  if (s == "petersen") return FiniteGraph::petersen();
  if (s.starts_with("g6:")) return graph6_decode(s.substr(3));
  if (s.starts_with("file:")) {
    const std::string body = read_file(s.substr(5));
    std::vector<std::string> lines;
    for (auto& l : split(body, '\n')) {
      while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.pop_back();
      if (!l.empty() && l[0] != '#') lines.push_back(l);
    }
    if (lines.empty()) throw ParseError("empty pattern file", 0);
    const bool numeric = std::all_of(lines[0].begin(), lines[0].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!numeric) return graph6_decode(lines[0]);
    FiniteGraph g(static_cast<std::size_t>(to_vertex(lines[0])));
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream ls(lines[i]);
      std::size_t u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError("bad edge line '" + lines[i] + "'", i);
      g.set_edge(u, v);
    }
    return g;
  }
  return graph6_decode(s);
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-prefix laboratory for the countable random graph", "rado_lab"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Common c;
  std::map<std::string, Handler> handlers;
  std::string format = "json";

  // edge
  Vertex u = 0, v = 0;
  {
    auto* s = app.add_subcommand("edge", "query one pair of the ambient graph");
    add_common(s, c);
    s->add_option("-u", u)->required();
    s->add_option("-v", v)->required();
    handlers["edge"] = [&] { return Outcome{{{"edge", c.oracle().edge(u, v)}}}; };
  }

  std::string host_text;
  std::string pattern_text;
  std::uint64_t budget = kDefaultNodeBudget;

  // adj
  {
    auto* s = app.add_subcommand("adj", "induced subgraph on a host set");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    handlers["adj"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto g = induced_subgraph(c.oracle(), host);
      json edges = json::array();
      for (auto [i, j] : g.edges()) edges.push_back({host[i], host[j]});
      return Outcome{{{"vertices", vertices_json(host.elements())},
                      {"order", g.order()},
                      {"edge_count", g.edge_count()},
                      {"edges", edges},
                      {"graph6", graph6_encode(g)}}};
    };
  }

  // type
  std::string base_text;
  Vertex vertex_m = 0;
  {
    auto* s = app.add_subcommand("type", "type of a vertex over an ordered base list");
    add_common(s, c);
    s->add_option("--base", base_text, "comma-separated base vertices, in order");
    s->add_option("-m", vertex_m)->required();
    handlers["type"] = [&] {
      std::vector<Vertex> base;
      for (const auto& item : split(base_text, ','))
        if (!item.empty()) base.push_back(to_vertex(item));
      const auto t = type_of(c.oracle(), vertex_m, base);
      return Outcome{{{"base", base}, {"vertex", vertex_m}, {"mask", t.mask_string()}}};
    };
  }

  // extension
  Vertex bound = 4096;
  {
    auto* s = app.add_subcommand("extension", "least witness for every type over a base set");
    add_common(s, c);
    s->add_option("--base", base_text)->required();
    s->add_option("--bound", bound);
    handlers["extension"] = [&] {
      const auto base = parse_host(base_text, 0, c.seed());
      const auto r = extension_check(c.oracle(), base, bound);
      json w = json::array();
      for (std::size_t t = 0; t < r.witnesses.size(); ++t) {
        std::string mask;
        for (std::size_t i = 0; i < base.size(); ++i) mask.push_back((t >> i) & 1U ? '1' : '0');
        w.push_back({{"type", mask}, {"witness", r.witnesses[t] ? json(*r.witnesses[t]) : json(nullptr)}});
      }
      return Outcome{{{"pass", r.pass}, {"missing", r.missing()}, {"witnesses", w}},
                     r.pass ? kOk : kCertifiedNegative};
    };
  }

  // embed
  EmbedConfig ecfg;
  bool backtrack = false;
  {
    auto* s = app.add_subcommand("embed", "greedy type-preserving embedding of a target into a host");
    add_common(s, c);
    s->add_option("--target", pattern_text, "graph6, named graph, or file:PATH")->required();
    s->add_option("--host", host_text)->required();
    s->add_option("--cap", ecfg.candidate_cap);
    s->add_option("--horizon", ecfg.score_horizon);
    s->add_flag("--backtrack", backtrack, "allow depth-1 backtracking");
    handlers["embed"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto target = parse_pattern(pattern_text);
      ecfg.fail_fast = !backtrack;
      try {
        const auto e = embed_target(c.oracle(), target, host, ecfg);
        json steps = json::array();
        for (const auto& st : e.steps)
          steps.push_back({{"index", st.index},
                           {"required_type", st.required.mask_string()},
                           {"chosen", st.chosen},
                           {"score", st.score}});
        return Outcome{{{"images", e.images}, {"verified", true}, {"steps", steps}, {"backtracks", e.backtracks}}};
      } catch (const EmbedDeadEnd& d) {
        return Outcome{{{"verified", false},
                        {"error", d.what()},
                        {"dead_end", {{"step", d.step()}, {"required_type", d.required().mask_string()}, {"remaining", d.remaining()}}}},
                       kExhausted};
      }
    };
  }

  // audit-weak
  std::size_t kmax = 4;
  {
    auto* s = app.add_subcommand("audit-weak", "search for every unlabeled graph up to a given order");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    s->add_option("--kmax", kmax);
    s->add_option("--budget", budget);
    handlers["audit-weak"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto r = weak_universality(c.oracle(), host, kmax, budget);
      json entries = json::array();
      for (const auto& e : r.entries) {
        json row{{"canonical", e.canonical},
                 {"order", e.pattern.order()},
                 {"outcome", to_string(e.result.outcome)},
                 {"nodes", e.result.nodes}};
        if (e.result.outcome == SearchOutcome::found) row["witness"] = e.result.mapping;
        entries.push_back(row);
      }
      const int code = r.absent > 0 ? kCertifiedNegative : (r.exhausted > 0 ? kExhausted : kOk);
      return Outcome{{{"pass", r.pass}, {"classes", r.entries.size()}, {"absent", r.absent}, {"exhausted", r.exhausted},
                      {"patterns", entries}},
                     code};
    };
  }

  // contains
  {
    auto* s = app.add_subcommand("contains", "induced-subgraph search for one pattern");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    s->add_option("--pattern", pattern_text)->required();
    s->add_option("--budget", budget);
    handlers["contains"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto pattern = parse_pattern(pattern_text);
      const auto r = contains_induced(c.oracle(), host, pattern, budget);
      json rep{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}};
      if (r.outcome == SearchOutcome::found) rep["witness"] = r.mapping;
      const int code = r.outcome == SearchOutcome::found    ? kOk
                       : r.outcome == SearchOutcome::absent ? kCertifiedNegative
                                                            : kExhausted;
      return Outcome{rep, code};
    };
  }

  // gfree-max
  std::string window_text;
  std::string mode_text = "exact";
  {
    auto* s = app.add_subcommand("gfree-max", "largest pattern-free subset of a window");
    add_common(s, c);
    s->add_option("--window", window_text, "interval a-b")->required();
    s->add_option("--pattern", pattern_text)->required();
    s->add_option("--mode", mode_text)->check(CLI::IsMember({"exact", "greedy"}));
    handlers["gfree-max"] = [&] {
      const auto parts = split(window_text, '-');
      if (parts.size() != 2) throw ParseError("window must be a-b", 0);
      const auto pattern = parse_pattern(pattern_text);
      const auto s = max_gfree_subset(c.oracle(), to_vertex(parts[0]), to_vertex(parts[1]), pattern,
                                      mode_text == "exact" ? GfreeMode::exact : GfreeMode::greedy);
      return Outcome{{{"subset", vertices_json(s.elements())}, {"size", s.size()}, {"mode", mode_text}, {"verified", true}}};
    };
  }

  // dyadic-audit
  std::uint64_t n_param = 1;
  unsigned k_lo = 1, k_hi = 5, majorant_m = 4;
  {
    auto* s = app.add_subcommand("dyadic-audit", "pattern-free sizes on dyadic windows against k*N");
    add_common(s, c);
    s->add_option("--pattern", pattern_text)->required();
    s->add_option("--nparam", n_param);
    s->add_option("--kmin", k_lo);
    s->add_option("--kmax", k_hi);
    s->add_option("--majorant-m", majorant_m);
    handlers["dyadic-audit"] = [&] {
      const auto pattern = parse_pattern(pattern_text);
      const auto rows = dyadic_audit(c.oracle(), pattern, n_param, k_lo, k_hi);
      json arr = json::array();
      bool any = false;
      for (const auto& r : rows) {
        any = any || r.violation;
        arr.push_back({{"k", r.k},
                       {"window", {r.window_first, r.window_last}},
                       {"size", r.size},
                       {"exact", r.exact},
                       {"threshold", r.threshold},
                       {"violation", r.violation}});
      }
      const auto maj = dyadic_majorant(majorant_m, n_param);
      return Outcome{{{"windows", arr},
                      {"majorant", {{"m", majorant_m}, {"head", num(maj.head)}, {"tail", num(maj.tail)}, {"total", num(maj.total())}}}},
                     any ? kCertifiedNegative : kOk};
    };
  }

  // density
  std::string checkpoints_text;
  {
    auto* s = app.add_subcommand("density", "prefix densities at checkpoints");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    s->add_option("--checkpoints", checkpoints_text, "comma list; default dyadic");
    handlers["density"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      std::vector<Vertex> cps;
      for (auto x : parse_size_list(checkpoints_text)) cps.push_back(x);
      if (cps.empty()) cps = dyadic_checkpoints(host.prefix_bound());
      const auto r = density_profile(host, cps);
      json d = json::array();
      for (double x : r.densities) d.push_back(num(x));
      return Outcome{{{"checkpoints", r.checkpoints}, {"densities", d}, {"sup_density", num(r.sup_density)},
                      {"final_density", num(r.final_density)}}};
    };
  }

  // sum
  std::string weight_text = "reciprocal";
  {
    auto* s = app.add_subcommand("sum", "weighted reciprocal sum over a host set");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    s->add_option("--weight", weight_text, "reciprocal or power:eps");
    handlers["sum"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto w = WeightFunction::parse(weight_text);
      return Outcome{{{"sum", num(weighted_sum(host, w))}, {"weight", w.name()}}};
    };
  }

  // thick
  {
    auto* s = app.add_subcommand("thick", "longest interval inside a host set");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    handlers["thick"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      return Outcome{{{"interval", interval_json(thickness(host))}}};
    };
  }

  // ap
  {
    auto* s = app.add_subcommand("ap", "longest arithmetic progression inside a host set");
    add_common(s, c);
    s->add_option("--host", host_text)->required();
    handlers["ap"] = [&] {
      const auto host = parse_host(host_text, c.prefix_bound, c.seed());
      const auto p = longest_ap(host);
      return Outcome{{{"ap", {{"start", p.start}, {"difference", p.difference}, {"length", p.length}}}}};
    };
  }

  // construct-thick / construct-thick-copy
  std::size_t blocks = 3;
  auto thick_report = [](const ThickConstruction& t) {
    json iv = json::array();
    for (const auto& i : t.intervals) iv.push_back(interval_json(i));
    return json{{"intervals", iv},
                {"members", format_intervals(t.members)},
                {"candidates_scanned", t.candidates_scanned},
                {"verified", t.verified}};
  };
  {
    auto* s = app.add_subcommand("construct-thick", "thick set with no edges");
    add_common(s, c);
    s->add_option("--blocks", blocks);
    handlers["construct-thick"] = [&] {
      const Vertex n = c.prefix_bound == 0 ? 1'000'000 : c.prefix_bound;
      try {
        return Outcome{thick_report(construct_thick_edgeless(c.oracle(), blocks, n))};
      } catch (const PrefixExhausted& e) {
        return Outcome{{{"verified", false}, {"error", e.what()}, {"block", e.block()}, {"scan_position", e.scan_position()}},
                       kExhausted};
      }
    };
  }
  {
    auto* s = app.add_subcommand("construct-thick-copy", "thick set inducing a prescribed target");
    add_common(s, c);
    s->add_option("--target", pattern_text)->required();
    s->add_option("--blocks", blocks);
    handlers["construct-thick-copy"] = [&] {
      const Vertex n = c.prefix_bound == 0 ? 1'000'000 : c.prefix_bound;
      const auto target = parse_pattern(pattern_text);
      try {
        auto t = construct_thick_copy(c.oracle(), target, blocks, n);
        auto rep = thick_report(t);
        rep["images"] = t.images;
        return Outcome{rep};
      } catch (const PrefixExhausted& e) {
        return Outcome{{{"verified", false}, {"error", e.what()}, {"block", e.block()}, {"scan_position", e.scan_position()}},
                       kExhausted};
      }
    };
  }

  // construct-pi02
  std::string family_text = "substantial";
  std::size_t levels = 2;
  {
    auto* s = app.add_subcommand("construct-pi02", "family member with finite connected components");
    add_common(s, c);
    s->add_option("--family", family_text, "substantial or power:eps");
    s->add_option("--levels", levels);
    handlers["construct-pi02"] = [&] {
      const Vertex n = c.prefix_bound == 0 ? 1'000'000 : c.prefix_bound;
      const auto family = FamilyDescriptor::parse(family_text);
      try {
        const auto m = construct_pi02_member(c.oracle(), family, levels, n);
        json blocks_json = json::array();
        for (const auto& b : m.blocks) blocks_json.push_back(b);
        json certs = json::object();
        for (std::size_t i = 0; i < m.forced.size(); ++i)
          certs[std::to_string(i + 1)] = {{"forced_k", m.forced[i]}, {"k", m.thresholds[i]}};
        return Outcome{{{"family", m.family},
                        {"blocks", blocks_json},
                        {"certificates", certs},
                        {"sum", num(m.weight)},
                        {"cross_block_edges", m.cross_block_edges},
                        {"largest_component", m.largest_component},
                        {"verified", m.verified}}};
      } catch (const Pi02Failure& e) {
        return Outcome{{{"verified", false}, {"error", e.what()}, {"level", e.level()},
                        {"expected_candidates", num(e.expected_candidates())}},
                       kExhausted};
      }
    };
  }

  // mc-density
  std::size_t k_size = 1, n_sets = 1, pool = 10000, trials = 20;
  {
    auto* s = app.add_subcommand("mc-density", "Monte Carlo check of the (1 - 2^-k)^n density");
    add_common(s, c);
    s->add_option("--k", k_size);
    s->add_option("--n", n_sets);
    s->add_option("--pool", pool);
    s->add_option("--trials", trials);
    handlers["mc-density"] = [&] {
      const auto r = mc_density_star(c.seed(), k_size, n_sets, pool, trials);
      const bool within = std::fabs(r.estimate.mean - r.target) <= 3.0 * r.estimate.stderr_;
      return Outcome{{{"estimate", num(r.estimate.mean)}, {"stderr", num(r.estimate.stderr_)},
                      {"target", num(r.target)}, {"within_3_stderr", within}, {"trials", r.estimate.trials}}};
    };
  }

  // mc-gfree
  std::string n_list_text = "3,4,5,6";
  double c_param = 0.05;
  {
    auto* s = app.add_subcommand("mc-gfree", "probability that a random graph is pattern-free");
    add_common(s, c);
    s->add_option("--pattern", pattern_text)->required();
    s->add_option("--n", n_list_text, "comma list of orders");
    s->add_option("--trials", trials);
    s->add_option("--c", c_param, "envelope constant in 2^{-c n^2}");
    s->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    handlers["mc-gfree"] = [&] {
      const auto pattern = parse_pattern(pattern_text);
      std::vector<CsvRow> rows;
      json arr = json::array();
      for (std::size_t n : parse_size_list(n_list_text)) {
        const auto est = mc_gfree_probability(pattern, n, trials, c.seed());
        CsvRow row{n, est.estimate.mean, est.estimate.stderr_, std::nullopt, gfree_envelope(c_param, n)};
        json j{{"n", n}, {"estimate", num(row.estimate)}, {"stderr", num(row.stderr_)}, {"envelope", num(row.envelope)}};
        if (n <= 6 && pattern.order() <= n) {
          const auto ex = exact_gfree_count(pattern, n);
          row.exact = ex.probability();
          j["exact"] = num(*row.exact);
          j["exact_count"] = ex.count;
          j["labeled_graphs"] = ex.total;
        }
        rows.push_back(row);
        arr.push_back(j);
      }
      json rep{{"rows", arr}};
      if (format == "csv") {
        std::ostringstream csv;
        write_csv(csv, rows);
        rep["csv"] = csv.str();
      }
      return Outcome{rep};
    };
  }

  // mc-fn
  {
    auto* s = app.add_subcommand("mc-fn", "probability of a pattern-free subgraph of size ceil(N log2 n)");
    add_common(s, c);
    s->add_option("--pattern", pattern_text)->required();
    s->add_option("--n", n_list_text, "comma list of orders");
    s->add_option("--nparam", n_param);
    s->add_option("--trials", trials);
    s->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    handlers["mc-fn"] = [&] {
      const auto pattern = parse_pattern(pattern_text);
      const auto ns = parse_size_list(n_list_text);
      const auto rows = mc_fn_bound(pattern, ns, n_param, trials, c.seed());
      json arr = json::array();
      std::vector<CsvRow> csv_rows;
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"f", r.f}, {"hits", r.hits}, {"estimate", num(r.estimate.mean)},
                       {"stderr", num(r.estimate.stderr_)}, {"lower_bound", r.lower_bound}, {"envelope", num(r.envelope)}});
        csv_rows.push_back({r.n, r.estimate.mean, r.estimate.stderr_, std::nullopt, r.envelope});
      }
      json rep{{"rows", arr}};
      if (format == "csv") {
        std::ostringstream csv;
        write_csv(csv, csv_rows);
        rep["csv"] = csv.str();
      }
      return Outcome{rep};
    };
  }

  // sample-mup
  double p_incl = 0.5;
  {
    auto* s = app.add_subcommand("sample-mup", "sample a set from the product measure mu_p");
    add_common(s, c);
    s->add_option("--prob", p_incl, "inclusion probability p");
    handlers["sample-mup"] = [&] {
      const Vertex n = c.prefix_bound == 0 ? 10'000 : c.prefix_bound;
      const auto a = sample_mu_p(p_incl, n, c.seed());
      return Outcome{{{"size", a.size()}, {"members", format_intervals(a)}}};
    };
  }

  // typefreq
  std::string mask_text;
  {
    auto* s = app.add_subcommand("typefreq", "frequency of one type over a base set");
    add_common(s, c);
    s->add_option("--base", base_text)->required();
    s->add_option("--mask", mask_text, "bitstring over the base; default all zeros");
    handlers["typefreq"] = [&] {
      const Vertex n = c.prefix_bound == 0 ? 100'000 : c.prefix_bound;
      TypeSpec t;
      for (const auto& item : split(base_text, ','))
        if (!item.empty()) t.base.push_back(to_vertex(item));
      if (mask_text.empty()) mask_text.assign(t.base.size(), '0');
      if (mask_text.size() != t.base.size()) throw ContractError("mask length differs from base size");
      for (char ch : mask_text) t.mask.push_back(ch == '1');
      const auto r = type_frequency_check(c.oracle(), t, n);
      return Outcome{{{"positions", r.positions}, {"hits", r.hits}, {"frequency", num(r.frequency)},
                      {"expected", num(r.expected)}, {"sigma", num(r.sigma)}, {"within_3_sigma", r.within_band},
                      {"runs", r.runs}, {"runs_z", num(r.runs_z)}}};
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Outcome result;
  try {
    result = handlers.at(name)();
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  json record{{"command", name}, {"seed", c.seed()}, {"version", kVersion}, {"config", config_of(sub)}, {"exit_code", result.code}};
  record.update(result.report);
  const std::string text = record.dump(2) + "\n";
  if (!c.output.empty()) {
    std::ofstream f(c.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << c.output << "'\n";
      return kUsage;
    }
    f << text;
    if (format == "csv" && record.contains("csv")) {
      std::ofstream(c.output + ".csv", std::ios::binary) << record["csv"].get<std::string>();
    }
  } else {
    out << text;
  }
  return result.code;
}

}  // namespace rado::cli
