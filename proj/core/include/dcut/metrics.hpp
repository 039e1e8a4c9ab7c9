#pragma once

#include <limits>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

// Sentinel for "no path".
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// All-pairs shortest paths by BFS from every vertex.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g);

  int at(int u, int v) const { return d_[std::size_t(u) * n_ + v]; }
  int n() const { return n_; }

  int eccentricity(int v) const;

private:
  int n_ = 0;
  std::vector<int> d_;
};

// Single-source distances (kInfDist for unreachable).
std::vector<int> bfs_distances(const Graph& g, int src);

// Diameter / radius; kInfDist when disconnected, 0 for n <= 1.
int diameter(const Graph& g);
int radius(const Graph& g);

bool is_connected(const Graph& g);

// Components sorted by smallest member; vertices ascending within each.
std::vector<std::vector<int>> connected_components(const Graph& g);
// Same but as bitsets.
std::vector<Bitset> component_sets(const Graph& g);
// Components of the induced subgraph g[s], as bitsets over the full vertex set.
std::vector<Bitset> component_sets_within(const Graph& g, const Bitset& s);

}  // namespace dcut
