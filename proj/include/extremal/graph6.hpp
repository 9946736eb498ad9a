#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Standard graph6 text (no ">>graph6<<" header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. Throws ParseError carrying the failing byte
/// offset. A trailing '\n' or "\r\n" is tolerated.
Graph decode_graph6(std::string_view text);

/// One graph per non-empty line. Errors report the line number.
std::vector<Graph> decode_graph6_stream(std::string_view text);

}  // namespace extremal
