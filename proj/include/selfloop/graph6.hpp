#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "selfloop/graph.hpp"

namespace selfloop {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 with the single-byte header only (n <= 62).
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Loop-set sidecar: hex digits, digit k holds vertices 4k..4k+3 with
// bit j of the digit marking vertex 4k+j. An empty string is S = {}.
LoopSet parse_loop_mask(std::string_view hex, std::size_t n);
std::string format_loop_mask(const LoopSet& s);

/// One corpus line: `<graph6>` or `<graph6> : <hexmask>`.
struct Record {
  Graph graph;
  std::optional<LoopSet> loops;
  std::string graph6;
};

Record parse_record(std::string_view line);
std::string format_record(const SelfLoopGraph& gs);

/// True for blank lines and `#` comments.
bool is_skippable_line(std::string_view line);

}  // namespace selfloop
