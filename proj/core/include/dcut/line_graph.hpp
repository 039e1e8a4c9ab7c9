#pragma once

#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

struct LineGraphResult {
  Graph graph;              // L(g)
  std::vector<Edge> edges;  // edges[i] = edge of g behind line-graph vertex i
};

// Line graph; vertex i of L(g) is the i-th edge of g in canonical edge order.
LineGraphResult line_graph(const Graph& g);

}  // namespace dcut
