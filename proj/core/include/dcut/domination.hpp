#pragma once

#include <optional>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

// Every vertex outside `s` has a neighbour in `s`.
bool dominates(const Graph& g, const Bitset& s);

// Smallest dominating set of size <= cap, exhaustively (sizes ascending,
// lexicographic within a size). nullopt when none that small exists.
std::optional<std::vector<int>> min_dominating_set(const Graph& g, int cap);

struct DominatingCliqueOrC5 {
  std::vector<int> vertices;
  bool is_clique;  // otherwise an induced C5 in cycle order
};

// A dominating set that induces a clique or a C5. Connected P5-free graphs
// always have one; NotFound (nullopt) certifies the input was not P5-free
// (callers treat it as a class violation). Deterministic search: cliques are
// grown by backtracking, highest-degree start vertices first; C5s are scanned
// in pattern order.
std::optional<DominatingCliqueOrC5> find_dominating_clique_or_c5(const Graph& g);

}  // namespace dcut
