#include "dcut/metrics.hpp"

#include <algorithm>

namespace dcut {

std::vector<int> bfs_distances(const Graph& g, int src) {
  int n = g.vertex_count();
  std::vector<int> dist(n, kInfDist);
  // Frontier-expansion BFS on bitsets.
  Bitset seen(n), frontier(n);
  seen.set(src);
  frontier.set(src);
  dist[src] = 0;
  int level = 0;
  while (frontier.any()) {
    Bitset next(n);
    for (int v : bits(frontier)) next |= g.neighbours(v);
    next -= seen;
    ++level;
    for (int v : bits(next)) dist[v] = level;
    seen |= next;
    frontier = next;
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
  d_.resize(std::size_t(n_) * n_);
  for (int v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(), d_.begin() + std::size_t(v) * n_);
  }
}

int DistanceMatrix::eccentricity(int v) const {
  int e = 0;
  for (int u = 0; u < n_; ++u) {
    int d = at(v, u);
    if (d == kInfDist) return kInfDist;
    e = std::max(e, d);
  }
  return e;
}

int diameter(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  int dia = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int u = 0; u < n; ++u) {
      if (dist[u] == kInfDist) return kInfDist;
      dia = std::max(dia, dist[u]);
    }
  }
  return dia;
}

int radius(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return 0;
  int rad = kInfDist;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int u = 0; u < n; ++u) {
      if (dist[u] == kInfDist) { ecc = kInfDist; break; }
      ecc = std::max(ecc, dist[u]);
    }
    rad = std::min(rad, ecc);
  }
  return rad;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  auto dist = bfs_distances(g, 0);
  for (int v = 0; v < n; ++v)
    if (dist[v] == kInfDist) return false;
  return true;
}

std::vector<Bitset> component_sets_within(const Graph& g, const Bitset& s) {
  std::vector<Bitset> comps;
  Bitset todo = s;
  while (todo.any()) {
    int src = todo.first();
    Bitset comp(g.vertex_count()), frontier(g.vertex_count());
    comp.set(src);
    frontier.set(src);
    while (frontier.any()) {
      Bitset next(g.vertex_count());
      for (int v : bits(frontier)) next |= g.neighbours(v);
      next &= todo;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    comps.push_back(comp);
    todo -= comp;
  }
  return comps;
}

std::vector<Bitset> component_sets(const Graph& g) {
  return component_sets_within(g, g.full_vertex_set());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& c : component_sets(g)) out.push_back(c.to_vector());
  return out;
}

}  // namespace dcut
