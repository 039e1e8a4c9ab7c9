#include <algorithm>
#include <optional>
#include <vector>

#include "dcut/branching.hpp"
#include "dcut/domination.hpp"
#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"
#include "dcut/oracle.hpp"
#include "dcut/propagation.hpp"
#include "dcut/solvers.hpp"
#include "solver_internal.hpp"

namespace dcut {

namespace {

using detail::structural_fail;

// The blue/red phase search used when the dominating clique D is larger than
// 3d. D is monochromatic and fixed blue by the colour-swap symmetry; level by
// level a dominating clique-or-C5 of the current uncoloured component is
// found and the branch either quits (some of its vertices will turn red) or
// paints it blue and descends into one chosen component. A vertex of L_{h+1}
// has blue neighbours in each of D, D_1..D_h, so red vertices must show up in
// some D_i with i <= d and quitting deeper is pointless.
struct P5Search {
  const Graph& g;
  int d;
  SolveStats& stats;
  std::optional<PartialColouring>& found;
  Bitset d_outer;  // the big blue clique D

  // region = candidate L_{level+1}: connected, exactly the uncoloured part.
  void step(const PartialColouring& pc, const LevelDecomposition& lvl, const Bitset& region) {
    if (found) return;
    int level = lvl.level + 1;

    auto [sub, map] = induced_subgraph(g, region);
    auto ds = find_dominating_clique_or_c5(sub);
    if (!ds)
      structural_fail("p5free",
                      "no dominating clique or C5 in a connected induced subgraph of a "
                      "P5-free graph");
    std::vector<int> di;
    di.reserve(ds->vertices.size());
    for (int v : ds->vertices) di.push_back(map[v]);
    std::sort(di.begin(), di.end());

    LevelDecomposition next = lvl;
    next.dom_sets.push_back(di);
    next.levels.push_back(region);
    next.level = level;

    stats.bump("p5/quit");
    quit_checks(next);
    red_phase(pc, di);
    if (found) return;

    if (level >= d) return;  // deeper red vertices would see d+1 blue sets
    PartialColouring pc2 = pc;
    for (int v : di) pc2.set(v, Colour::Blue);
    Bitset rem = region - Bitset::of(g.vertex_count(), di);
    std::vector<Bitset> comps = component_sets_within(g, rem);
    for (std::size_t k = 0; k < comps.size() && !found; ++k) {
      stats.bump("p5/blue");
      PartialColouring pc3 = pc2;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j == k) continue;
        for (int v : bits(comps[j])) pc3.set(v, Colour::Blue);
      }
      step(pc3, next, comps[k]);
    }
  }

  void quit_checks(const LevelDecomposition& lvl) const {
    if (lvl.level > d) structural_fail("p5free", "blue phase quit beyond level d");
    if (!dominates(g, d_outer)) structural_fail("p5free", "D stopped dominating G");
    for (int h = 1; h <= lvl.level; ++h) {
      Bitset dh = Bitset::of(g.vertex_count(), lvl.dom_sets[h]);
      if (!lvl.levels[h - 1].is_subset_of(g.closed_neighbourhood(dh)))
        structural_fail("p5free", "D_" + std::to_string(h) + " does not dominate L_" +
                                      std::to_string(h));
    }
  }

  void red_phase(const PartialColouring& pc, const std::vector<int>& di) {
    if (int(di.size()) <= 2 * d + 1)
      red_case1(pc, di);
    else
      red_case2(pc, di);
  }

  // Small D_i: all colourings of D_i keeping at least one red, then the
  // Lemma-2.1 completion around D_i finishes L_i (D_i dominates it).
  void red_case1(const PartialColouring& pc, const std::vector<int>& di) {
    Bitset di_set = Bitset::of(g.vertex_count(), di);
    Bitset frontier = di_set & pc.uncoloured();
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& state) {
          if (!state.red().intersects(di_set)) return true;  // other branches cover this
          detail::lemma21_complete(
              g, di, d, state,
              [&](const PartialColouring& full) {
                if (full.uncoloured().any())
                  structural_fail("p5free", "Lemma-2.1 completion around D_i left "
                                            "uncoloured vertices");
                if (validate_colouring(g, full, d).ok) found = full;
                return !found;
              },
              &stats, "p5/case1");
          return !found;
        },
        &stats, "p5/case1");
  }

  // Big D_i: necessarily a monochromatic red clique. Propagation settles the
  // D/D_i budget checks and the forced moves; then uncoloured vertices are
  // cleared pairwise through a D_i neighbour, at most d rounds.
  void red_case2(const PartialColouring& pc, const std::vector<int>& di) {
    stats.bump("p5/case2");
    Bitset di_set = Bitset::of(g.vertex_count(), di);
    if (!detail::is_clique(g, di_set))
      structural_fail("p5free", "D_i with more than 2d+1 vertices is not a clique");
    PartialColouring pc2 = pc;
    for (int v : di) pc2.set(v, Colour::Red);
    ++stats.propagation_calls;
    ProcessResult pr = colour_process(g, pc2, d);
    if (!pr.feasible) return;
    pair_rounds(pr.pc, di_set, 1);
  }

  void pair_rounds(const PartialColouring& pc, const Bitset& di_set, int round) {
    if (found) return;
    Bitset unc = pc.uncoloured();
    if (unc.none()) {
      if (validate_colouring(g, pc, d).ok) found = pc;
      return;
    }
    if (round > d)
      structural_fail("p5free", "more than d w_j/x_j rounds in red-phase Case 2 "
                                "(the p <= d bound failed)");
    int w = unc.first();
    Bitset xs = g.neighbours(w) & di_set;
    if (xs.none())
      structural_fail("p5free", "uncoloured vertex " + std::to_string(w) +
                                    " has no neighbour in D_i");
    int x = xs.first();
    Bitset frontier = g.neighbours(x) & unc;
    if (round == 1) {
      Bitset ys = g.neighbours(x) & d_outer;
      if (ys.none())
        structural_fail("p5free", "D_i vertex " + std::to_string(x) +
                                      " has no neighbour in D");
      frontier |= g.neighbours(ys.first()) & unc;
    }
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& state) {
          pair_rounds(state, di_set, round + 1);
          return !found;
        },
        &stats, "p5/case2");
  }
};

}  // namespace

SolveOutcome solve_p5_free(const Graph& g, int d) {
  detail::Timer timer;
  if (d < 2) throw PreconditionError("solve_p5_free requires d >= 2");
  if (!is_connected(g)) throw PreconditionError("solve_p5_free requires a connected graph");
  if (auto p5 = find_induced(g, PatternId::P5))
    throw PreconditionError("not P5-free: vertices " + detail::vertex_list(*p5) +
                            " induce a P5");

  int n = g.vertex_count();
  SolveStats stats;
  auto ds = find_dominating_clique_or_c5(g);
  if (!ds)
    structural_fail("p5free", "no dominating clique or C5 found in a connected P5-free graph");
  std::vector<int> dom = ds->vertices;
  std::sort(dom.begin(), dom.end());

  if (int(dom.size()) <= 3 * d) {
    auto cert = solve_with_dominating_set(g, dom, d, &stats);
    stats.wall_time_ms = timer.ms();
    if (cert) {
      auto pc = PartialColouring::of(n, cert->red, cert->blue);
      return detail::make_yes(g, d, pc, std::move(stats), "p5free");
    }
    return detail::make_no(std::move(stats), "p5free");
  }

  if (!ds->is_clique)
    structural_fail("p5free", "dominating set larger than 3d reported as a C5");

  PartialColouring pc0(n);
  for (int v : dom) pc0.set(v, Colour::Blue);
  std::optional<PartialColouring> found;
  P5Search search{g, d, stats, found, Bitset::of(n, dom)};
  LevelDecomposition root;
  root.dom_sets.push_back(dom);
  root.level = 0;

  std::vector<Bitset> comps = component_sets_within(g, pc0.uncoloured());
  for (std::size_t k = 0; k < comps.size() && !found; ++k) {
    stats.bump("p5/blue");
    PartialColouring pc1 = pc0;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j == k) continue;
      for (int v : bits(comps[j])) pc1.set(v, Colour::Blue);
    }
    search.step(pc1, root, comps[k]);
  }

  stats.wall_time_ms = timer.ms();
  if (found) return detail::make_yes(g, d, *found, std::move(stats), "p5free");
  return detail::make_no(std::move(stats), "p5free");
}

}  // namespace dcut
