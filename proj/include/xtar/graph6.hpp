#pragma once

#include <stdexcept>
#include <string>

#include "xtar/graph.hpp"

namespace xtar {

// Malformed graph6 input; `offset` is the byte position of the defect.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// One-line graph6 record -> Graph.  Bytes are offset-63, the body encodes the
// upper triangle column-major with zero padding.  Orders above 64 are refused.
Graph parse_graph6(const std::string& text);

// Graph -> graph6 record for the labeled adjacency (no relabeling).
std::string emit_graph6(const Graph& g);

}  // namespace xtar
