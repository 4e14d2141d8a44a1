#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rado/graph_core.hpp"

namespace rado::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCertifiedNegative = 2,
  kExhausted = 3,
};

/// Host-set notation: "all", "even", "odd", "a-b" intervals and single
/// integers, comma unions of those, "ap:a,d", "mup:p" (sampled from seed),
/// "file:PATH" (lines of integers or interval notation). prefix_bound 0 means
/// "use the largest explicit element"; the keyword forms then fail.
VertexSet parse_host(std::string_view text, Vertex prefix_bound, std::uint64_t seed);

/// Pattern notation: Kn, Pn, Cn, En (edgeless), "petersen", "g6:<graph6>",
/// "file:PATH" (graph6, or an edge list whose first line is the order and
/// later lines are 0-based "u v" pairs), or a bare graph6 string.
FiniteGraph parse_pattern(std::string_view text);

/// Runs one subcommand; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rado::cli
