#include "xtar/graph6.hpp"

namespace xtar {

namespace {

constexpr int kLo = 63;
constexpr int kHi = 126;

int body_byte(const std::string& text, std::size_t i) {
  if (i >= text.size()) throw Graph6Error("graph6: record truncated", i);
  unsigned char c = text[i];
  if (c < kLo || c > kHi) throw Graph6Error("graph6: byte outside printable range 63..126", i);
  return c - kLo;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw Graph6Error("graph6: empty record", 0);

  std::size_t pos = 0;
  long long n;
  int first = body_byte(text, 0);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // '~' prefix: 3- or 6-byte order field.
    if (body_byte(text, 1) == 63) {
      n = 0;
      for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | body_byte(text, i);
      pos = 8;
    } else {
      n = 0;
      for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | body_byte(text, i);
      pos = 4;
    }
  }
  if (n < 1) throw Graph6Error("graph6: order must be at least 1", 0);
  if (n > 64) throw Graph6Error("graph6: order exceeds 64", 0);

  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() != pos + nbytes)
    throw Graph6Error("graph6: body length is " + std::to_string(text.size() - pos) +
                          " bytes, expected " + std::to_string(nbytes),
                      text.size() > pos + nbytes ? pos + nbytes : text.size());

  Graph g(static_cast<int>(n), text);
  long long k = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++k) {
      int b = body_byte(text, pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(row, col);
    }
  // Remaining bits of the final byte must be zero padding.
  if (nbytes > 0) {
    int b = body_byte(text, pos + nbytes - 1);
    int used = static_cast<int>(nbits - 6 * (static_cast<long long>(nbytes) - 1));
    if (b & ((1 << (6 - used)) - 1))
      throw Graph6Error("graph6: nonzero padding bits", pos + nbytes - 1);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kLo));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
    out.push_back(static_cast<char>((n & 63) + kLo));
  }
  int acc = 0, nb = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + kLo));
        acc = 0;
        nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kLo));
  return out;
}

}  // namespace xtar
