#pragma once

#include <span>

#include "edgepart/graph.hpp"
#include "text.hpp"

namespace edgepart::detail {

// Parses the header and m edge lines starting at lines[0]. Returns the graph
// and the number of lines consumed; trailing lines are left to the caller.
Graph parse_graph_prefix(std::span<const text::Line> lines, std::size_t& consumed);

}  // namespace edgepart::detail
