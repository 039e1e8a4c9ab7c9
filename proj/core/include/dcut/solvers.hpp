#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"
#include "dcut/oracle.hpp"
#include "dcut/patterns.hpp"
#include "dcut/stats.hpp"

namespace dcut {

// Decision plus witness plus branch accounting. yes <=> certificate present;
// certificates are re-validated before being handed out, unconditionally.
struct SolveOutcome {
  bool yes = false;
  std::optional<DCutCertificate> certificate;
  SolveStats stats;
  std::string algorithm;
};

// Bookkeeping of the blue phase of the P5-free solver, which peels dominating
// structures level by level: D dominates the whole graph, each D_h dominates
// L_h, and L_{h+1} is a connected component of L_h - D_h. Public so tests can
// inspect the decomposition a quit was taken from.
struct LevelDecomposition {
  std::vector<std::vector<int>> dom_sets;  // D, D_1, ..., D_i
  std::vector<Bitset> levels;              // L_1, ..., L_i
  int level = 0;                           // i; at most d at every quit
};

// Bookkeeping of the (P3+P4)-free solver: a partial colouring plus the moving
// N_1/N_2 regions and the current component list of G[N_2]. After every
// N_1-update the components consist of red and uncoloured vertices only and
// each induces a complete graph.
struct BranchState {
  PartialColouring pc;
  Bitset n1;                          // coloured boundary around the seed
  std::vector<Bitset> n2_components;  // components of the region beyond n1,
                                      // smallest member first
  int level = 0;          // branch depth bookkeeping
  std::string label;      // branch provenance ("step1", "case2", ...)
};

// Diameter-2 solver. Preconditions: connected, diameter <= 2, d >= 2.
SolveOutcome solve_diameter2(const Graph& g, int d);

// P5-free solver. Preconditions: connected, P5-free, d >= 2. A failed
// dominating clique-or-C5 search certifies a class violation and is reported
// with an induced-P5 witness.
SolveOutcome solve_p5_free(const Graph& g, int d);

// (P3+P4)-free solver. Preconditions: connected, (P3+P4)-free, d >= 2.
// P5-free inputs are delegated to solve_p5_free.
SolveOutcome solve_p3p4_free(const Graph& g, int d);

using InnerSolver = std::function<SolveOutcome(const Graph&, int)>;

// (H+P1)-free wrapper: H-free inputs go to `inner`; otherwise an induced copy
// of H is located, must dominate (else the input was not (H+P1)-free and the
// offending vertex is reported), and bounded-dominating-set branching decides.
SolveOutcome solve_h_plus_p1(const Graph& g, PatternId h, int d, const InnerSolver& inner);

struct AutoOptions {
  OracleLimits oracle_limits;  // guards the exhaustive fallback
};

// Class-recognising dispatcher. Routing order: capped minimum dominating set
// (<= 3d) -> dominating-set branching; then, for d >= 2: diameter <= 2,
// P5-free, (P3+P4)-free, (P5+P1)-free, (P5+2P1)-free; finally the exhaustive
// oracle under its size guard, else UnsupportedError. For d = 1 only the
// dominating-set route and the oracle fallback apply.
SolveOutcome solve_auto(const Graph& g, int d, const AutoOptions& opts = {});

}  // namespace dcut
