#pragma once

#include <utility>
#include <vector>

#include "dcut/bitset.hpp"

namespace dcut {

using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph, immutable after construction.
// Adjacency is kept as one bitset row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
  const Bitset& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // Edges sorted lexicographically; the canonical edge order used everywhere
  // (line graphs, edge colourings, certificates).
  std::vector<Edge> edges() const;

  // Neighbours of any member of `s` (excluding s itself? no: plain union of rows).
  Bitset neighbourhood_of_set(const Bitset& s) const;
  // N[s] = s plus all neighbours.
  Bitset closed_neighbourhood(const Bitset& s) const;

  Bitset full_vertex_set() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
};

// Induced subgraph on `keep`; map[new_index] = original vertex, ascending.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const Bitset& keep);

}  // namespace dcut
