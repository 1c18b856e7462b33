#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

/// Malformed graph6 input; `offset` is the byte position of the problem.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6: " + what + " (byte " +
                           std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// graph6 text line for g: the order as one byte n+63 for n <= 62, or the
/// '~' escape followed by three sextet bytes up to 2^18-1; then the
/// upper-triangle bits in column-major pair order (0,1),(0,2),(1,2),(0,3),...
/// packed big-endian six per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);

/// Inverse of graph6_encode. Rejects malformed length, bytes outside
/// [63,126], non-canonical order encodings, and nonzero trailing pad bits.
Graph graph6_decode(std::string_view text);

/// One graph per non-empty line; line terminators are LF or CRLF.
std::vector<Graph> graph6_decode_lines(std::string_view text);

}  // namespace satspec
