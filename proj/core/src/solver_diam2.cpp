#include <algorithm>
#include <optional>
#include <vector>

#include "dcut/branching.hpp"
#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"
#include "dcut/propagation.hpp"
#include "dcut/solvers.hpp"
#include "solver_internal.hpp"

namespace dcut {

namespace {

using detail::structural_fail;

// Branching search for diameter-2 graphs. Seeds fix a reference vertex red
// and enumerate the blue part of its neighbourhood; afterwards the uncoloured
// region is shrunk by one of three moves until it is gone:
//   - split region: one terminal round of branching over its full boundary,
//   - connected with radius >= 3 inside: colour the far set of its first vertex,
//   - connected with radius <= 2 inside: colour a dominating ball.
// Every survived ball round hands each still-uncoloured vertex a new coloured
// neighbour, so at most 2d+1 ball rounds can pass the propagation sieve.
struct Diam2Search {
  const Graph& g;
  int d;
  SolveStats& stats;
  std::optional<PartialColouring>& found;

  void run() {
    int n = g.vertex_count();
    int v = 0;
    for (int u = 1; u < n; ++u)
      if (g.degree(u) < g.degree(v)) v = u;

    std::vector<int> nv = g.neighbours(v).to_vector();
    int deg = int(nv.size());

    // Blue subsets of N(v), sizes 1..d; the reference vertex is always red.
    for (int sz = 1; sz <= std::min(d, deg) && !found; ++sz) {
      std::vector<int> idx(sz);
      for (int i = 0; i < sz; ++i) idx[i] = i;
      while (!found) {
        stats.bump("diam2/seed");
        PartialColouring pc(n);
        pc.set(v, Colour::Red);
        std::vector<bool> blue(deg, false);
        for (int i : idx) blue[i] = true;
        for (int i = 0; i < deg; ++i) pc.set(nv[i], blue[i] ? Colour::Blue : Colour::Red);
        seed(pc);
        int i = sz - 1;
        while (i >= 0 && idx[i] == deg - sz + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
    }

    // N[v] entirely red: some vertex outside must be blue.
    Bitset outside = g.closed_neighbourhood(Bitset::of(n, {v})).complement();
    for (int x : bits(outside)) {
      if (found) break;
      stats.bump("diam2/seed");
      PartialColouring pc(n);
      pc.set(v, Colour::Red);
      for (int u : nv) pc.set(u, Colour::Red);
      pc.set(x, Colour::Blue);
      seed(pc);
    }
  }

  void seed(const PartialColouring& pc) {
    ++stats.propagation_calls;
    ProcessResult pr = colour_process(g, pc, d);
    if (pr.feasible) loop(pr.pc, 0);
  }

  void loop(const PartialColouring& pc, int ball_rounds) {
    if (found) return;
    Bitset z = pc.uncoloured();
    if (z.none()) {
      if (validate_colouring(g, pc, d).ok) found = pc;
      return;
    }
    std::vector<Bitset> comps = component_sets_within(g, z);
    if (comps.size() >= 2) {
      split_region(pc, z, comps);
      return;
    }

    auto [h, map] = induced_subgraph(g, z);
    DistanceMatrix dm(h);
    int zn = h.vertex_count();
    int rad = dm.eccentricity(0);
    for (int u = 1; u < zn; ++u) rad = std::min(rad, dm.eccentricity(u));

    if (rad >= 3) {
      // Everything far from z's first vertex inside G[Z]; nonempty since that
      // vertex itself has eccentricity >= rad >= 3.
      Bitset far(g.vertex_count());
      for (int u = 0; u < zn; ++u)
        if (dm.at(0, u) >= 3) far.set(map[u]);
      if (far.none()) structural_fail("diam2", "radius >= 3 but the far set is empty");
      extend_budgeted(
          g, pc, far, d,
          [&](const PartialColouring& state) {
            loop(state, ball_rounds);
            return !found;
          },
          &stats, "diam2/far");
      return;
    }

    if (ball_rounds + 1 > 2 * d + 1)
      structural_fail("diam2", "more than 2d+1 ball rounds survived propagation");
    int centre = -1;
    for (int u = 0; u < zn; ++u)
      if (dm.eccentricity(u) <= 2) {
        centre = u;
        break;
      }
    if (centre < 0) structural_fail("diam2", "radius <= 2 but no centre found");
    Bitset ball(g.vertex_count());
    ball.set(map[centre]);
    for (int u : bits(h.neighbours(centre))) ball.set(map[u]);
    extend_budgeted(
        g, pc, ball, d,
        [&](const PartialColouring& state) {
          loop(state, ball_rounds + 1);
          return !found;
        },
        &stats, "diam2/ball");
  }

  // Z splits into parts. The coloured common neighbours tying the first part
  // to the rest, and vice versa, cover all of Z, and each such hub set sits in
  // the neighbourhood of an uncoloured vertex, hence has at most 2d members at
  // a propagation fixpoint. One round of branching over Z finishes the state.
  void split_region(const PartialColouring& pc, const Bitset& z,
                    const std::vector<Bitset>& comps) {
    int n = g.vertex_count();
    const Bitset& z1 = comps[0];
    Bitset rest = z - z1;
    int v1 = z1.first();
    int v2 = comps[1].first();

    Bitset n1(n), n2(n);
    for (int w : bits(g.neighbours(v1)))
      if (g.neighbours(w).intersects(rest)) n1.set(w);
    for (int w : bits(g.neighbours(v2)))
      if (g.neighbours(w).intersects(z1)) n2.set(w);

    if (n1.intersects(z) || n2.intersects(z))
      structural_fail("diam2", "hub set touches the uncoloured region");
    if (n1.count() > 2 * d || n2.count() > 2 * d)
      structural_fail("diam2", "hub set larger than 2d at a propagation fixpoint");
    if (!rest.is_subset_of(g.neighbourhood_of_set(n1)))
      structural_fail("diam2", "first hub set misses part of the other components");
    if (!z1.is_subset_of(g.neighbourhood_of_set(n2)))
      structural_fail("diam2", "second hub set misses part of the first component");

    Bitset frontier = g.neighbourhood_of_set(n1 | n2) & z;
    if (frontier != z) structural_fail("diam2", "hub neighbourhoods do not cover Z");
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& state) {
          if (state.uncoloured().any())
            structural_fail("diam2", "split-region branching left vertices uncoloured");
          if (validate_colouring(g, state, d).ok) found = state;
          return !found;
        },
        &stats, "diam2/split");
  }
};

}  // namespace

SolveOutcome solve_diameter2(const Graph& g, int d) {
  detail::Timer timer;
  if (d < 2) throw PreconditionError("solve_diameter2 requires d >= 2");
  if (!is_connected(g)) throw PreconditionError("solve_diameter2 requires a connected graph");
  if (diameter(g) > 2)
    throw PreconditionError("solve_diameter2 requires diameter at most 2, got " +
                            std::to_string(diameter(g)));

  SolveStats stats;
  std::optional<PartialColouring> found;
  Diam2Search search{g, d, stats, found};
  search.run();
  stats.wall_time_ms = timer.ms();
  if (found) return detail::make_yes(g, d, *found, std::move(stats), "diam2");
  return detail::make_no(std::move(stats), "diam2");
}

}  // namespace dcut
