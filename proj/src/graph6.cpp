#include "rado/graph_core.hpp"

namespace rado {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 string truncated", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", pos);
  return c - 63;
}

}  // namespace

FiniteGraph graph6_decode(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos < text.size() && text[pos] == ':') throw ParseError("sparse6 is not supported", pos);
  if (pos < text.size() && text[pos] == '&') throw ParseError("digraph6 is not supported", pos);

  std::uint64_t n = 0;
  const int first = sextet(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos++));
  }
  if (n > 100000) throw ParseError("graph6 order too large for a dense matrix", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(bytes),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }

  FiniteGraph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  const std::size_t body = pos;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, body + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.set_edge(i, j);
    }
  }
  for (; k % 6 != 0; ++k) {
    const int chunk = sextet(text, body + k / 6);
    if ((chunk >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", body + k / 6);
  }
  return g;
}

std::string graph6_encode(const FiniteGraph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace rado
