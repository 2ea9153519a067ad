#pragma once

#include <string>
#include <string_view>

#include "strongq/graph.hpp"

namespace strongq {

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list: optional header "n <N>", then "i j" per line, 1-based,
// '#' starts a comment.  Errors carry the offending line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6 printable-byte encoding (short form, n <= 62).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
// Dispatch by file extension (.g6 -> graph6, otherwise edge list).
Graph load_graph_file(const std::string& path);

}  // namespace strongq
