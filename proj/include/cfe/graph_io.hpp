#pragma once

#include <string>
#include <string_view>

#include "cfe/graph.hpp"

namespace cfe {

enum class GraphFormat {
    edgelist,  ///< "u v" per line, 0-based, '#' comments
    dimacs,    ///< "p edge n m" header, "e u v" lines, 1-based, 'c' comments
};

GraphFormat parse_graph_format(std::string_view name);

/// Edge ids follow file order. Throws ParseError (with line number) on
/// malformed lines and InputError on loops or duplicate edges.
Graph read_graph(std::string_view text, GraphFormat format);

/// An edge-list graph has n = 1 + largest endpoint, so trailing isolated
/// vertices do not survive a round trip through that format.
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace cfe
