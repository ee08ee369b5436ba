#pragma once

#include <iosfwd>
#include <string>

#include "evc/graph.hpp"

namespace evc {

// Edge-list text format: one edge per line as two whitespace-separated
// decimal vertex ids; '#' lines are comments. The vertex count is 1 + the
// largest id unless the first non-comment line is "n <count>".

/// Throws GraphError on malformed lines (message carries the line number).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Writes the "n <count>" header followed by the edges in index order.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace evc
