#pragma once

#include <string>
#include <vector>

#include "treespec/graph.hpp"

namespace treespec {

// Standard graph6 encoding, short form only (1 <= n <= 62): byte n+63, then
// ceil(n(n-1)/2 / 6) bytes of upper-triangle adjacency bits, column-major,
// each 6-bit chunk offset by 63.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// One graph per line; blank lines and lines starting with '#' are skipped.
std::vector<Graph> parse_graph6_lines(const std::string& text);

}  // namespace treespec
