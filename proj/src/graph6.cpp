#include "satspec/graph6.hpp"

namespace satspec {

namespace {

constexpr std::size_t kG6MaxOrder = (std::size_t{1} << 18) - 1;

std::size_t pair_bit_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kG6MaxOrder)
    throw std::invalid_argument("graph6: order exceeds 2^18-1");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned accum = 0;
  int nbits = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      accum = (accum << 1) | (g.has_edge(u, v) ? 1u : 0u);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(accum + 63));
        accum = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((accum << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(std::string_view s) {
  if (s.empty()) throw Graph6Error(0, "empty input");
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error(i, "byte out of range");
  }

  std::size_t pos = 0;
  std::size_t n = 0;
  if (s[0] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw Graph6Error(1, "order exceeds supported range");
    if (s.size() < 4) throw Graph6Error(s.size(), "truncated order escape");
    n = (static_cast<std::size_t>(s[1] - 63) << 12) |
        (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    if (n <= 62) throw Graph6Error(0, "non-canonical order encoding");
    pos = 4;
  } else {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  }
  if (n > Graph::kMaxOrder)
    throw Graph6Error(0, "order exceeds supported maximum");

  const std::size_t nbits = pair_bit_count(n);
  const std::size_t nbytes = (nbits + 5) / 6;
  if (s.size() - pos != nbytes)
    throw Graph6Error(s.size(), s.size() - pos < nbytes ? "truncated edge data"
                                                        : "trailing bytes");

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      unsigned sextet = static_cast<unsigned>(s[pos + bit / 6] - 63);
      if ((sextet >> (5 - bit % 6)) & 1u) g.add_edge(u, v);
    }
  }
  // Pad bits beyond the last pair must be zero.
  for (; bit < nbytes * 6; ++bit) {
    unsigned sextet = static_cast<unsigned>(s[pos + bit / 6] - 63);
    if ((sextet >> (5 - bit % 6)) & 1u)
      throw Graph6Error(pos + bit / 6, "nonzero trailing bits");
  }
  return g;
}

std::vector<Graph> graph6_decode_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? text.size() - start : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(graph6_decode(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace satspec
