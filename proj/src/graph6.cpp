#include "tilab/graph6.hpp"

#include <vector>

#include "tilab/errors.hpp"

namespace tilab {
namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw ParseError("orders above 258047 are not supported");
    }
    if (text.size() < 4) throw ParseError("truncated size prefix");
    for (std::size_t i = 1; i < 4; ++i) {
      if (!printable(text[i])) throw ParseError("malformed character in size");
      n = (n << 6) | (text[i] - kBias);
    }
    pos = 4;
  } else {
    if (!printable(text[0])) throw ParseError("malformed character in size");
    n = text[0] - kBias;
    pos = 1;
  }
  if (n < kMinVertices || n > kMaxVertices) {
    throw ParseError("order " + std::to_string(n) + " outside [2, 64]");
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("length mismatch: expected " + std::to_string(expected) +
                     " data bytes, found " + std::to_string(text.size() - pos));
  }

  std::vector<VertexSet> rows(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const char c = text[pos + bit / 6];
      if (!printable(c)) {
        throw ParseError("malformed character at byte " +
                         std::to_string(pos + bit / 6));
      }
      if (((c - kBias) >> (5 - bit % 6)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  // Padding bits in the last byte must be zero.
  if (bits % 6 != 0) {
    const char last = text.back();
    if (!printable(last)) throw ParseError("malformed character");
    const int pad = static_cast<int>(6 - bits % 6);
    if (((last - kBias) & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits");
    }
  }
  return Graph(n, rows);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace tilab
