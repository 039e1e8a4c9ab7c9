#include "dcut/line_graph.hpp"

namespace dcut {

LineGraphResult line_graph(const Graph& g) {
  std::vector<Edge> es = g.edges();
  int m = int(es.size());
  // Group edge indices by endpoint; two edges are adjacent iff they share one.
  std::vector<std::vector<int>> at(g.vertex_count());
  for (int i = 0; i < m; ++i) {
    at[es[i].first].push_back(i);
    at[es[i].second].push_back(i);
  }
  std::vector<Edge> ledges;
  for (const auto& group : at)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        ledges.emplace_back(std::min(group[a], group[b]), std::max(group[a], group[b]));
  return {Graph::from_edges(m, ledges), std::move(es)};
}

}  // namespace dcut
