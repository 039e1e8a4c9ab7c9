#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcut/graph.hpp"

namespace dcut {

// Fixed menu of small patterns used by the recognisers and solvers.
enum class PatternId {
  P1, P2, P3, P4, P5, P6, P7,
  K1_3, K1_4,
  C3, C4, C5, C6, C7,
  ThreeP2,      // 3P2: three disjoint edges
  P3plusP4,    // P3 + P4
  P5plusP1,    // P5 + P1
  P5plus2P1,   // P5 + 2P1
};

Graph pattern_graph(PatternId id);
std::string pattern_name(PatternId id);
// Accepts the names emitted by pattern_name plus a few aliases ("claw", "K1,3").
std::optional<PatternId> pattern_from_name(const std::string& name);
std::vector<PatternId> all_pattern_ids();

// First induced copy of `h` in `g` (vertices of g in pattern-vertex order), or
// nullopt. Deterministic: ordered-tuple backtracking, lowest candidates first.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);
std::optional<std::vector<int>> find_induced(const Graph& g, PatternId id);

// Enumerate induced copies; callback gets pattern-ordered vertices and may
// return false to stop. Copies are deduplicated as vertex sets.
void for_each_induced(const Graph& g, const Graph& h,
                      const std::function<bool(const std::vector<int>&)>& cb);

bool is_free(const Graph& g, PatternId id);

// All induced P4s a-b-c-d, path-ordered with a < d, sorted.
std::vector<std::array<int, 4>> all_induced_p4(const Graph& g);

}  // namespace dcut
