#include "dcut/branching.hpp"

namespace dcut {

namespace {

int pick_branch_vertex(const Graph& g, const PartialColouring& pc, const Bitset& open) {
  // Lowest-index vertex with the maximum number of coloured neighbours.
  Bitset coloured = pc.red() | pc.blue();
  int best = -1, best_cnt = -1;
  for (int v : bits(open)) {
    int cnt = g.neighbours(v).intersection_count(coloured);
    if (cnt > best_cnt) { best = v; best_cnt = cnt; }
  }
  return best;
}

bool recurse(const Graph& g, const PartialColouring& pc, const Bitset& frontier, int d,
             const std::function<bool(const PartialColouring&)>& yield, SolveStats* stats,
             const std::string& phase) {
  Bitset open = frontier & pc.uncoloured();
  if (open.none()) return yield(pc);
  int v = pick_branch_vertex(g, pc, open);
  for (Colour c : {Colour::Red, Colour::Blue}) {
    PartialColouring next = pc;
    next.set(v, c);
    if (stats) { stats->bump(phase); ++stats->propagation_calls; }
    ProcessResult pr = colour_process(g, std::move(next), d);
    if (!pr.feasible) continue;
    if (!recurse(g, pr.pc, frontier, d, yield, stats, phase)) return false;
  }
  return true;
}

}  // namespace

bool extend_budgeted(const Graph& g, const PartialColouring& pc, const Bitset& frontier,
                     int d, const std::function<bool(const PartialColouring&)>& yield,
                     SolveStats* stats, const std::string& phase) {
  if (stats) ++stats->propagation_calls;
  ProcessResult pr = colour_process(g, pc, d);
  if (!pr.feasible) return true;
  return recurse(g, pr.pc, frontier, d, yield, stats, phase);
}

std::vector<PartialColouring> extend_budgeted_all(const Graph& g, const PartialColouring& pc,
                                                  const Bitset& frontier, int d) {
  std::vector<PartialColouring> out;
  extend_budgeted(g, pc, frontier, d, [&](const PartialColouring& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace dcut
