#pragma once

#include <iosfwd>
#include <string>

#include "keygraph/graph.hpp"

namespace keygraph {

/// Text edge-list format: first line "n m", then m lines "i j" with
/// i < j, 0-based. Reader throws ParseError (with 1-based line number)
/// on any malformed, duplicate, or out-of-range entry.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes edges sorted by (i, j); output is byte-stable for equal graphs.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace keygraph
