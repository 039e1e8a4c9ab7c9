#pragma once

#include <optional>

#include "dcut/branching.hpp"
#include "dcut/colouring.hpp"
#include "dcut/stats.hpp"

namespace dcut {

// Guards and toggles for the exhaustive reference solvers. The toggles only
// disable prunings; decisions must not depend on them.
struct OracleLimits {
  int max_n = 26;
  int max_edges = 20;
  std::optional<double> time_budget_ms;
  bool symmetry_break = true;
  bool propagate = true;
};

enum class OracleStatus { Yes, No, Timeout };

struct OracleOutcome {
  OracleStatus status = OracleStatus::No;
  std::optional<DCutCertificate> certificate;
  SolveStats stats;
};

// Complete branch-and-propagate reference solver. Explores extensions of `pc`
// (empty = all free); when `pc` is empty the first branched vertex is fixed
// red, which is safe by colour-swap symmetry. Throws GuardError when the
// instance exceeds max_n.
OracleOutcome oracle_solve_status(const Graph& g, int d,
                                  const PartialColouring& pc = {},
                                  const OracleLimits& lim = {});

// Convenience wrappers; throw Error on Timeout (only possible when a time
// budget was configured).
std::optional<DCutCertificate> oracle_solve(const Graph& g, int d,
                                            const OracleLimits& lim = {});
std::optional<DCutCertificate> oracle_solve(const Graph& g, int d,
                                            const PartialColouring& pc,
                                            const OracleLimits& lim = {});

// Independent exhaustive search over edge colourings of g (not routed through
// the line graph; used to cross-check that route). Guarded by max_edges.
std::optional<EdgeColouring> edge_oracle_solve(const Graph& g, int d,
                                               const OracleLimits& lim = {});

// Try all 2^|dom| colourings of a dominating set; a red dominating-set vertex
// turns at most d of its still-uncoloured neighbours blue and the rest red
// (symmetrically for blue). Every completed colouring is validated; first
// valid one wins. Complete whenever `dom` dominates g.
std::optional<DCutCertificate> solve_with_dominating_set(const Graph& g,
                                                         const std::vector<int>& dom, int d,
                                                         SolveStats* stats = nullptr);

}  // namespace dcut
