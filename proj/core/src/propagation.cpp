#include "dcut/propagation.hpp"

namespace dcut {

ProcessResult colour_process(const Graph& g, PartialColouring pc, int d, ScanOrder order) {
  int n = g.vertex_count();
  ProcessResult out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      int v = order == ScanOrder::Ascending ? k : n - 1 - k;
      int nr = g.neighbours(v).intersection_count(pc.red());
      int nb = g.neighbours(v).intersection_count(pc.blue());
      switch (pc.at(v)) {
        case Colour::Red:
          if (nb > d) return out;  // infeasible
          break;
        case Colour::Blue:
          if (nr > d) return out;
          break;
        case Colour::None:
          if (nr > d && nb > d) return out;
          if (nr > d) {
            pc.set(v, Colour::Red);
            ++out.forced_moves;
            changed = true;
          } else if (nb > d) {
            pc.set(v, Colour::Blue);
            ++out.forced_moves;
            changed = true;
          }
          break;
      }
    }
  }
  out.feasible = true;
  out.pc = std::move(pc);
  return out;
}

}  // namespace dcut
