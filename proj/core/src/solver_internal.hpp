#pragma once

// Helpers shared by the class solvers. Not installed.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"
#include "dcut/solvers.hpp"
#include "dcut/stats.hpp"

namespace dcut::detail {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Wrap a finished colouring into a yes-outcome, re-validating it first; a
// failure here means a solver tried to return garbage.
SolveOutcome make_yes(const Graph& g, int d, const PartialColouring& pc, SolveStats stats,
                      const std::string& algorithm);

SolveOutcome make_no(SolveStats stats, const std::string& algorithm);

// Throws StructuralError with a uniform prefix.
[[noreturn]] void structural_fail(const std::string& algorithm, const std::string& what);

bool is_clique(const Graph& g, const Bitset& s);

// "{a, b, c}" for error messages.
std::string vertex_list(const std::vector<int>& vs);

// Lemma-2.1-style completion seeded from pc: walk dom in order; each member u
// (which must already be coloured) flips at most d of its still-uncoloured
// neighbours to the colour opposite to u's own and pulls the rest onto u's
// colour. Prunes assignments that overshoot a budget around a just-coloured
// vertex (counts only grow, so this is safe). Yields every completion;
// yield returning false stops the walk and makes lemma21_complete return
// false as well.
bool lemma21_complete(const Graph& g, const std::vector<int>& dom, int d, PartialColouring pc,
                      const std::function<bool(const PartialColouring&)>& yield,
                      SolveStats* stats, const std::string& phase);

}  // namespace dcut::detail
