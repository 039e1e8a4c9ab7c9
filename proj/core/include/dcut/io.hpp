#pragma once

#include <string>

#include "dcut/graph.hpp"

namespace dcut {

// graph6: canonical short form for n <= 62, '~'-prefixed long forms above.
// parse accepts an optional ">>graph6<<" header and trailing whitespace,
// and reports malformed input with a byte offset.
Graph parse_graph6(const std::string& s);
std::string emit_graph6(const Graph& g);

// Plain edge list: first line "n m", then one "u v" line per edge (0-based).
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g);

// Heuristic input reader: edge list when the first line looks like "n m",
// otherwise graph6.
Graph parse_graph_auto(const std::string& text);

}  // namespace dcut
