#include "support/common.hpp"

#include "dcut/metrics.hpp"

namespace testsupport {

using dcut::Colour;
using dcut::Edge;
using dcut::Graph;
using dcut::PartialColouring;

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

Graph clique(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});          // outer C5
    e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    e.push_back({i, 5 + i});                // spokes
  }
  return Graph::from_edges(10, e);
}

Graph wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 1; i <= rim; ++i) {
    e.push_back({0, i});
    e.push_back({i, i % rim + 1});
  }
  return Graph::from_edges(rim + 1, e);
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) e.push_back({i, j});
    Graph g = Graph::from_edges(n, e);
    if (dcut::is_connected(g)) return g;
  }
}

PartialColouring random_precolouring(int n, double frac, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(frac), red(0.5);
  PartialColouring pc(n);
  for (int v = 0; v < n; ++v)
    if (pick(rng)) pc.set(v, red(rng) ? Colour::Red : Colour::Blue);
  return pc;
}

Graph p5_deep_instance(int d) {
  int top = 3 * d + 1, reg = 2 * d + 2;
  std::vector<Edge> e;
  auto K = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      for (int j = i + 1; j < hi; ++j) e.push_back({i, j});
  };
  K(0, top);  // dominating clique, forced by the per-vertex pendants below
  int w0 = top, q0 = top + reg, p0 = top + 2 * reg;
  K(w0, w0 + reg);  // the region's big clique, with its own pendants
  for (int j = 0; j < reg; ++j) e.push_back({w0 + j, q0 + j});
  // One top vertex complete to the region keeps it dominated and P5-free;
  // the region block gets the lower ids so the component loop visits it
  // before the pendant singletons.
  for (int v = w0; v < p0; ++v) e.push_back({top - 1, v});
  for (int i = 0; i < top - 1; ++i) e.push_back({i, p0 + i});
  return Graph::from_edges(p0 + top - 1, e);
}

dcut::CnfInstance figure_split_instance() {
  dcut::CnfInstance inst;
  inst.n_vars = 6;
  inst.flavour = dcut::CnfFlavour::SplitPosNeg;
  auto add = [&](int a, int b, int c, bool pos) {
    inst.clauses.push_back({{a - 1, b - 1, c - 1}, pos});
  };
  add(1, 2, 3, true);
  add(1, 3, 4, true);
  add(2, 5, 6, true);
  add(4, 5, 6, true);
  add(1, 2, 4, false);
  add(1, 3, 5, false);
  add(2, 4, 6, false);
  add(3, 5, 6, false);
  return inst;
}

}  // namespace testsupport
