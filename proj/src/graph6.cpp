#include "mfc/graph6.hpp"

#include <vector>

namespace mfc {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c, std::size_t pos) {
  const auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    throw Graph6Error("byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                      " outside 63..126");
  }
  return b - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph order above 64");
    if (text.size() < 4) throw Graph6Error("truncated size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i], i);
    pos = 4;
  } else {
    n = sextet(text[0], 0);
    pos = 1;
  }
  if (n < 1) throw Graph6Error("graph order must be at least 1");
  if (n > kMaxVertices) throw Graph6Error("graph order " + std::to_string(n) + " above 64");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Graph6Error("truncated adjacency payload");
  if (text.size() - pos > bytes) throw Graph6Error("trailing bytes after adjacency payload");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = sextet(text[pos + k / 6], pos + k / 6);
      if ((group >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (std::size_t b = pos; b < text.size(); ++b) sextet(text[b], b);
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
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

}  // namespace mfc
