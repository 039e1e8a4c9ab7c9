#pragma once

#include <optional>

#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"

namespace dcut {

enum class ScanOrder { Ascending, Descending };

struct ProcessResult {
  bool feasible = false;
  PartialColouring pc;   // fixpoint when feasible
  int forced_moves = 0;
};

// Exhaustive forcing rules:
//   - an uncoloured vertex with >= d+1 red neighbours becomes red
//     (symmetrically blue);
//   - infeasible when an uncoloured vertex has >= d+1 of both, or a coloured
//     vertex already has >= d+1 opposite-coloured neighbours (no extension
//     can repair either).
// Confluent: the fixpoint does not depend on the scan order (the order
// parameter exists so tests can exercise that).
ProcessResult colour_process(const Graph& g, PartialColouring pc, int d,
                             ScanOrder order = ScanOrder::Ascending);

}  // namespace dcut
