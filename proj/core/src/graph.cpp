#include "dcut/graph.hpp"

#include <algorithm>

#include "dcut/errors.hpp"

namespace dcut {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" +
                              std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (g.adj_[u].test(v)) continue;  // ignore duplicates
    g.adj_[u].set(v);
    g.adj_[v].set(u);
    ++g.m_;
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> es;
  es.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) es.emplace_back(u, v);
  return es;
}

Bitset Graph::neighbourhood_of_set(const Bitset& s) const {
  Bitset r(n_);
  for (int v : bits(s)) r |= adj_[v];
  return r;
}

Bitset Graph::closed_neighbourhood(const Bitset& s) const {
  Bitset r = neighbourhood_of_set(s);
  r |= s;
  return r;
}

Bitset Graph::full_vertex_set() const {
  Bitset b(n_);
  for (int i = 0; i < n_; ++i) b.set(i);
  return b;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bitset& keep) {
  std::vector<int> map = keep.to_vector();
  std::vector<int> inv(g.vertex_count(), -1);
  for (std::size_t i = 0; i < map.size(); ++i) inv[map[i]] = int(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Bitset& nb = g.neighbours(map[i]);
    for (int w : bits(nb))
      if (w > map[i] && inv[w] >= 0) es.emplace_back(int(i), inv[w]);
  }
  return {Graph::from_edges(int(map.size()), es), std::move(map)};
}

}  // namespace dcut
