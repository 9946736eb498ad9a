#include "extremal/graph6.hpp"

namespace extremal {

namespace {

constexpr int kBias = 63;

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int value = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      value = (value << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kBias));
        value = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((value << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  auto sextet = [&](std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: truncated input", pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", pos);
    return c - kBias;
  };
  std::size_t pos = 0;
  long n;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6: order above 258047 is not supported", 1);
    n = (static_cast<long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity", 0);
  const long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < expected) throw ParseError("graph6: truncated edge data", text.size());
  if (text.size() > expected) throw ParseError("graph6: trailing bytes", expected);
  Graph g(static_cast<int>(n));
  long index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      int word = sextet(pos + static_cast<std::size_t>(index / 6));
      if ((word >> (5 - index % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6) {
    int word = sextet(expected - 1);
    if (word & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding", expected - 1);
  }
  return g;
}

std::vector<Graph> decode_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    std::size_t end = text.find('\n');
    std::string_view row = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!row.empty() && row.back() == '\r') row.remove_suffix(1);
    if (row.empty()) continue;
    try {
      out.push_back(decode_graph6(row));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

}  // namespace extremal
