#pragma once

#include <functional>
#include <vector>

#include "dcut/propagation.hpp"
#include "dcut/stats.hpp"

namespace dcut {

// Shared branching engine behind every "try all colourings of X" step.
//
// Yields every colour-processed extension of `pc` in which all of `frontier`
// is coloured: depth-first, branch vertex = lowest-index frontier vertex with
// the most coloured neighbours, red before blue, colour_process after each
// assignment (branches that process to Infeasible are dropped). Yielded
// states may colour vertices beyond the frontier through propagation. Every
// valid total colouring extending `pc` extends at least one yielded state.
//
// The callback returns false to stop; extend_budgeted then returns false.
bool extend_budgeted(const Graph& g, const PartialColouring& pc, const Bitset& frontier,
                     int d, const std::function<bool(const PartialColouring&)>& yield,
                     SolveStats* stats = nullptr, const std::string& phase = "extend");

// Convenience for tests: collect all yielded states.
std::vector<PartialColouring> extend_budgeted_all(const Graph& g, const PartialColouring& pc,
                                                  const Bitset& frontier, int d);

}  // namespace dcut
