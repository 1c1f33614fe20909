#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

// Text format:
//   # comment lines anywhere
//   n m
//   u v        (m lines, 0 <= u, v < n, u != v; repeated lines are parallel edges)
// Edge indices follow the order of appearance. Errors raise ParseError with a 1-based line.
Multigraph parse_graph(std::string_view text);

// Canonical form: header then edges as "min max" sorted by (min, max). Each
// comment is emitted as a "# ..." line before the header.
std::string serialize_graph(const Multigraph& g, const std::vector<std::string>& comments = {});

Multigraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Multigraph& g, const std::vector<std::string>& comments = {});

}  // namespace spg
