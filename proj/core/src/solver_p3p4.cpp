#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "dcut/branching.hpp"
#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"
#include "dcut/patterns.hpp"
#include "dcut/propagation.hpp"
#include "dcut/solvers.hpp"
#include "solver_internal.hpp"

namespace dcut {

namespace {

using detail::structural_fail;

// Search for (P3+P4)-free graphs that do contain an induced P4. Step 1 looks
// for a colouring where some induced P4 is monochromatic (blue, after a
// colour swap); Step 2 covers the all-bichromatic case, where both colour
// classes are connected with diameter at most 2 and one forcing round
// finishes every branch.
//
// Bookkeeping convention for Step 1: the region beyond N[V(P)] starts as
// n2_region and conceptually shrinks as vertices turn blue (blue vertices
// "move to N_1"); red vertices stay. Its live part, n2_region minus the blue
// side, splits into complete components that contain red and uncoloured
// vertices only.
struct P3P4Search {
  const Graph& g;
  int d;
  SolveStats& stats;
  std::optional<PartialColouring>& found;

  Bitset pset, n1_region, n2_region;  // fixed per chosen P4

  void set_p4(const std::array<int, 4>& p4) {
    int n = g.vertex_count();
    pset = Bitset::of(n, {p4[0], p4[1], p4[2], p4[3]});
    n1_region = g.neighbourhood_of_set(pset) - pset;
    n2_region = g.closed_neighbourhood(pset).complement();
  }

  // ---- Step 1 -----------------------------------------------------------

  void try_p4(const std::array<int, 4>& p4) {
    set_p4(p4);
    stats.bump("p3p4/step1-p4");
    PartialColouring seed(g.vertex_count());
    for (int v : p4) seed.set(v, Colour::Blue);
    extend_budgeted(
        g, seed, n1_region, d,
        [&](const PartialColouring& st) {
          Bitset s = st.red() & n1_region;
          if (s.none())
            mono_case(st);
          else
            s_case(st, s);
          return !found;
        },
        &stats, "p3p4/step1-n1");
  }

  // Boundary all blue: red vertices can only live inside one complete far
  // component; all other components turn blue.
  void mono_case(const PartialColouring& pc) {
    if (pc.red().any())
      structural_fail("p3p4free", "red vertices appeared in a branch with an all-blue boundary");
    Bitset unc = pc.uncoloured();
    for (const Bitset& f : component_sets_within(g, n2_region)) {
      if (found) return;
      Bitset unc_f = f & unc;
      if (unc_f.none()) continue;
      if (!detail::is_clique(g, f))
        structural_fail("p3p4free", "a component of the far region is not complete");
      if (f.count() >= 2 * d + 1) {
        // Monochromatic component: all red is the only way to host reds here.
        if ((f - unc_f).any()) continue;  // partly blue already, must stay blue
        try_mono_candidate(pc, unc_f, unc_f, unc);
        continue;
      }
      std::vector<int> verts = unc_f.to_vector();
      int t = int(verts.size());
      for (unsigned mask = 1; mask < (1u << t) && !found; ++mask) {
        Bitset reds(g.vertex_count());
        for (int i = 0; i < t; ++i)
          if ((mask >> i) & 1u) reds.set(verts[i]);
        try_mono_candidate(pc, unc_f, reds, unc);
      }
    }
  }

  void try_mono_candidate(const PartialColouring& pc, const Bitset& unc_f, const Bitset& reds,
                          const Bitset& unc) {
    stats.bump("p3p4/step1-mono");
    PartialColouring full = pc;
    for (int v : bits(unc_f)) full.set(v, reds.test(v) ? Colour::Red : Colour::Blue);
    for (int v : bits(unc - unc_f)) full.set(v, Colour::Blue);
    if (validate_colouring(g, full, d).ok) found = full;
  }

  // Boundary holds red vertices S: branch the colourings of N(S), then chase
  // the component structure.
  void s_case(const PartialColouring& pc, const Bitset& s) {
    if (s.count() > 4 * d)
      structural_fail("p3p4free", "more than 4d red vertices on the seed boundary");
    Bitset frontier = (g.neighbourhood_of_set(s) - pset) & pc.uncoloured();
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& st) {
          s_state(st, s);
          return !found;
        },
        &stats, "p3p4/step1-s");
  }

  void s_state(const PartialColouring& st, const Bitset& s) {
    PartialColouring pc = st;
    if (!rules_fixpoint(pc)) return;
    if (pc.uncoloured().none()) {
      if (validate_colouring(g, pc, d).ok) found = pc;
      return;
    }
    std::vector<Bitset> comps = open_components(pc);
    component_asserts(pc, s, comps);

    for (int r : bits(s)) {
      int hits = 0, i1 = -1, i2 = -1;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if ((g.neighbours(r) & comps[i] & pc.red()).any()) {
          ++hits;
          if (i1 < 0)
            i1 = int(i);
          else if (i2 < 0)
            i2 = int(i);
        }
      }
      if (hits >= 2) {
        case1(pc, comps, i1, i2);
        return;
      }
    }
    case2(pc, s, comps);
  }

  // Forced moves on the live far region, interleaved with colour-processing:
  //   A. fully uncoloured component -> blue (its members only see blue);
  //   B. component of size >= 2d+1 with a red part -> rest red (monochromatic);
  //   C. component whose uncoloured vertices see no blue -> rest red.
  // Returns false when the branch dies.
  bool rules_fixpoint(PartialColouring& pc) {
    while (true) {
      bool changed = false;
      Bitset live = n2_region - pc.blue();
      for (const Bitset& f : component_sets_within(g, live)) {
        Bitset unc_f = f & pc.uncoloured();
        if (unc_f.none()) continue;
        if (!detail::is_clique(g, f))
          structural_fail("p3p4free", "a component of the far region is not complete");
        if (unc_f == f) {
          for (int v : bits(unc_f)) pc.set(v, Colour::Blue);
          changed = true;
          continue;
        }
        if (f.count() >= 2 * d + 1) {
          for (int v : bits(unc_f)) pc.set(v, Colour::Red);
          changed = true;
          continue;
        }
        bool sees_blue = false;
        for (int u : bits(unc_f))
          if ((g.neighbours(u) & pc.blue()).any()) {
            sees_blue = true;
            break;
          }
        if (!sees_blue) {
          for (int v : bits(unc_f)) pc.set(v, Colour::Red);
          changed = true;
        }
      }
      if (!changed) return true;
      ++stats.propagation_calls;
      ProcessResult pr = colour_process(g, pc, d);
      if (!pr.feasible) return false;
      pc = pr.pc;
    }
  }

  // Live far components that still hold uncoloured vertices.
  std::vector<Bitset> open_components(const PartialColouring& pc) const {
    std::vector<Bitset> out;
    for (Bitset& f : component_sets_within(g, n2_region - pc.blue()))
      if (f.intersects(pc.uncoloured())) out.push_back(std::move(f));
    return out;
  }

  // The structure every open component must have at a fixpoint: complete, at
  // most 2d vertices, a red vertex tied to S, an uncoloured vertex seeing
  // blue, and no uncoloured vertex next to a red boundary vertex.
  void component_asserts(const PartialColouring& pc, const Bitset& s,
                         const std::vector<Bitset>& comps) const {
    if ((pc.red() - n2_region) != s)
      structural_fail("p3p4free", "red vertices outside the far region drifted from S");
    if ((g.neighbourhood_of_set(s) & pc.uncoloured()).any())
      structural_fail("p3p4free", "an uncoloured vertex is adjacent to the red boundary");
    for (const Bitset& f : comps) {
      if (!detail::is_clique(g, f))
        structural_fail("p3p4free", "an open component is not complete");
      if (f.count() > 2 * d)
        structural_fail("p3p4free", "an open component has more than 2d vertices");
      bool tied = false;
      for (int v : bits(f & pc.red()))
        if ((g.neighbours(v) & s).any()) {
          tied = true;
          break;
        }
      if (!tied)
        structural_fail("p3p4free", "an open component has no red vertex tied to the boundary");
      bool sees_blue = false;
      for (int u : bits(f & pc.uncoloured()))
        if ((g.neighbours(u) & pc.blue()).any()) {
          sees_blue = true;
          break;
        }
      if (!sees_blue)
        structural_fail("p3p4free",
                        "an open component's uncoloured vertices see no blue vertex");
    }
  }

  // A red boundary vertex reaches red vertices in two open components: a
  // one-shot branching over the straddling blues and the two components,
  // then every leftover component completes independently.
  void case1(const PartialColouring& pc, const std::vector<Bitset>& comps, int i1, int i2) {
    int n = g.vertex_count();
    Bitset chosen = comps[i1] | comps[i2];
    Bitset t(n);
    for (int b : bits(pc.blue())) {
      int cnt = 0;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (int(i) == i1 || int(i) == i2) continue;
        if ((g.neighbours(b) & comps[i] & pc.uncoloured()).any()) ++cnt;
      }
      if (cnt >= 2) t.set(b);
    }
    if (t.count() > 4 * d)
      structural_fail("p3p4free", "more than 4d blue vertices straddle the outer components");
    Bitset frontier = (g.neighbourhood_of_set(t) | (chosen & pc.uncoloured())) & pc.uncoloured();
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& st) {
          if ((chosen & st.uncoloured()).any())
            structural_fail("p3p4free", "the two chosen components were left partly uncoloured");
          std::vector<Bitset> open = open_components(st);
          for (int v : bits(st.red() | st.blue())) {
            int cnt = 0;
            for (const Bitset& f : open)
              if ((g.neighbours(v) & f & st.uncoloured()).any()) ++cnt;
            if (cnt >= 2)
              structural_fail("p3p4free",
                              "a coloured vertex reaches uncoloured parts of two components");
          }
          std::vector<Bitset> groups;
          for (const Bitset& f : open) groups.push_back(f & st.uncoloured());
          complete_groups(st, groups);
          return !found;
        },
        &stats, "p3p4/case1");
  }

  // Every red boundary vertex sticks to one component: branch around an
  // induced P3 made of an uncoloured vertex, a red component vertex and its
  // red boundary neighbour; afterwards blues tie components into blocks of at
  // most d-1, each completed independently.
  void case2(const PartialColouring& pc, const Bitset& s, const std::vector<Bitset>& comps) {
    const Bitset& f1 = comps[0];
    int x = (f1 & pc.uncoloured()).first();
    int r1 = -1, r = -1;
    for (int v : bits(f1 & pc.red())) {
      Bitset rs = g.neighbours(v) & s;
      if (rs.any()) {
        r1 = v;
        r = rs.first();
        break;
      }
    }
    if (r1 < 0)
      structural_fail("p3p4free", "no red component vertex tied to the boundary in case 2");
    if (!g.has_edge(x, r1) || !g.has_edge(r1, r) || g.has_edge(x, r))
      structural_fail("p3p4free", "the case-2 pivot P3 is not induced");
    Bitset gamma = (g.neighbours(x) | g.neighbours(r1) | g.neighbours(r)) & pc.blue();
    if (gamma.count() > 3 * d)
      structural_fail("p3p4free", "more than 3d blue vertices meet the pivot P3");
    Bitset frontier = (g.neighbourhood_of_set(gamma) | f1) & pc.uncoloured();
    extend_budgeted(
        g, pc, frontier, d,
        [&](const PartialColouring& st) {
          PartialColouring pc2 = st;
          if (!rules_fixpoint(pc2)) return !found;
          if (pc2.uncoloured().none()) {
            if (validate_colouring(g, pc2, d).ok) found = pc2;
            return !found;
          }
          std::vector<Bitset> open = open_components(pc2);
          component_asserts(pc2, s, open);
          if ((f1 & pc2.uncoloured()).any())
            structural_fail("p3p4free", "the pivot component was left partly uncoloured");
          blocks_and_complete(pc2, open);
          return !found;
        },
        &stats, "p3p4/case2");
  }

  void blocks_and_complete(const PartialColouring& pc, const std::vector<Bitset>& comps) {
    int q = int(comps.size());
    std::vector<int> parent(q);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };

    for (int b : bits(pc.blue())) {
      std::vector<int> touch;
      for (int i = 0; i < q; ++i)
        if ((g.neighbours(b) & comps[i] & pc.uncoloured()).any()) touch.push_back(i);
      if (int(touch.size()) <= 1) continue;
      // Straddling blues must cover each component they touch entirely.
      for (int i : touch)
        if (!comps[i].is_subset_of(g.neighbours(b)))
          structural_fail("p3p4free", "a blue vertex straddles components without covering them");
      if (int(touch.size()) > d - 1)
        structural_fail("p3p4free", "a blue vertex spans more than d-1 linked components");
      for (std::size_t k = 1; k < touch.size(); ++k) parent[find(touch[k])] = find(touch[0]);
    }

    std::vector<std::vector<int>> blocks(q);
    for (int i = 0; i < q; ++i) blocks[find(i)].push_back(i);
    std::vector<Bitset> groups;
    for (int i = 0; i < q; ++i) {
      const std::vector<int>& blk = blocks[i];
      if (blk.empty()) continue;
      if (int(blk.size()) > 1) {
        if (int(blk.size()) > d - 1)
          structural_fail("p3p4free", "a linked block has more than d-1 components");
        bool covered = false;
        for (int b : bits(pc.blue())) {
          bool all = true;
          for (int j : blk)
            if (!comps[j].is_subset_of(g.neighbours(b))) {
              all = false;
              break;
            }
          if (all) {
            covered = true;
            break;
          }
        }
        if (!covered) structural_fail("p3p4free", "no blue vertex covers a linked block");
      }
      Bitset grp(g.vertex_count());
      for (int j : blk) grp |= comps[j] & pc.uncoloured();
      groups.push_back(grp);
    }
    complete_groups(pc, groups);
  }

  // Independent completion: groups of uncoloured vertices whose coloured
  // neighbours are shared with no other group. The first locally valid
  // colouring per group is kept; a group with none kills the branch.
  bool complete_groups(PartialColouring pc, const std::vector<Bitset>& groups) {
    for (const Bitset& grp : groups) {
      std::vector<int> verts = grp.to_vector();
      int t = int(verts.size());
      if (t > 2 * d * std::max(1, d - 1))
        structural_fail("p3p4free", "a completion group is larger than the theory allows");
      Bitset affected = g.closed_neighbourhood(grp);
      bool done = false;
      for (unsigned mask = 0; mask < (1u << t) && !done; ++mask) {
        stats.bump("p3p4/complete");
        PartialColouring cand = pc;
        for (int i = 0; i < t; ++i)
          cand.set(verts[i], (mask >> i) & 1u ? Colour::Red : Colour::Blue);
        bool ok = true;
        for (int v : bits(affected)) {
          Colour c = cand.at(v);
          if (c == Colour::None) continue;
          if (g.neighbours(v).intersection_count(cand.side(opposite(c))) > d) {
            ok = false;
            break;
          }
        }
        if (ok) {
          pc = cand;
          done = true;
        }
      }
      if (!done) return false;
    }
    if (pc.uncoloured().any())
      structural_fail("p3p4free", "independent completion left vertices uncoloured");
    if (!validate_colouring(g, pc, d).ok)
      structural_fail("p3p4free", "independently completed groups do not combine");
    found = pc;
    return true;
  }

  // ---- Step 2 -----------------------------------------------------------

  // All induced P4s bichromatic: both colour classes are connected with
  // diameter at most 2, so once one P4 and the neighbourhood of one far
  // vertex are branched, everything else is forced to the opposite side.
  void step2(const std::array<int, 4>& p4) {
    set_p4(p4);
    for (unsigned mask = 1; mask <= 14 && !found; ++mask) {
      stats.bump("p3p4/step2-seed");
      PartialColouring seed(g.vertex_count());
      for (int i = 0; i < 4; ++i)
        seed.set(p4[i], (mask >> i) & 1u ? Colour::Red : Colour::Blue);
      extend_budgeted(
          g, seed, n1_region, d,
          [&](const PartialColouring& st) {
            step2_state(st);
            return !found;
          },
          &stats, "p3p4/step2");
    }
  }

  void step2_state(const PartialColouring& st) {
    Bitset unc = st.uncoloured();
    if (unc.none()) {
      if (validate_colouring(g, st, d).ok) found = st;
      return;
    }
    if ((unc - n2_region).any())
      structural_fail("p3p4free", "uncoloured vertices outside the far region in step 2");
    std::vector<Bitset> comps = component_sets_within(g, n2_region);
    for (const Bitset& f : comps)
      if (!detail::is_clique(g, f))
        structural_fail("p3p4free", "a component of the far region is not complete");
    const Bitset* f1 = nullptr;
    for (const Bitset& f : comps)
      if (f.intersects(unc)) {
        f1 = &f;
        break;
      }
    if (!f1)
      structural_fail("p3p4free", "uncoloured vertices outside every far component in step 2");
    int x = (*f1 & unc).first();
    Bitset bx = g.neighbours(x) & st.blue() & n1_region;
    Bitset rx = g.neighbours(x) & st.red() & n1_region;
    Bitset frontier = (g.neighbourhood_of_set(bx | rx) | (*f1 & unc)) & unc;
    Bitset f1_copy = *f1;
    extend_budgeted(
        g, st, frontier, d,
        [&](const PartialColouring& st2) {
          step2_x(st2, x, f1_copy);
          return !found;
        },
        &stats, "p3p4/step2-x");
  }

  void step2_x(const PartialColouring& st, int x, const Bitset& f1) {
    Bitset unc = st.uncoloured();
    if (unc.none()) {
      if (validate_colouring(g, st, d).ok) found = st;
      return;
    }
    if (!st.coloured(x))
      structural_fail("p3p4free", "the chosen far vertex survived its own branching");
    if ((f1 & unc).any())
      structural_fail("p3p4free", "the chosen far component was left partly uncoloured");
    stats.bump("p3p4/step2-force");
    Colour oc = opposite(st.at(x));
    PartialColouring full = st;
    for (int v : bits(unc)) full.set(v, oc);
    if (validate_colouring(g, full, d).ok) found = full;
  }
};

}  // namespace

SolveOutcome solve_p3p4_free(const Graph& g, int d) {
  detail::Timer timer;
  if (d < 2) throw PreconditionError("solve_p3p4_free requires d >= 2");
  if (!is_connected(g)) throw PreconditionError("solve_p3p4_free requires a connected graph");
  if (auto bad = find_induced(g, PatternId::P3plusP4))
    throw PreconditionError("not (P3+P4)-free: vertices " + detail::vertex_list(*bad) +
                            " induce a P3+P4");
  if (is_free(g, PatternId::P5)) return solve_p5_free(g, d);

  SolveStats stats;
  std::optional<PartialColouring> found;
  P3P4Search search{g, d, stats, found, {}, {}, {}};
  std::vector<std::array<int, 4>> p4s = all_induced_p4(g);
  if (p4s.empty())
    detail::structural_fail("p3p4free", "a graph with an induced P5 has no induced P4");

  for (const auto& p4 : p4s) {
    if (found) break;
    search.try_p4(p4);
  }
  if (!found) search.step2(p4s.front());

  stats.wall_time_ms = timer.ms();
  if (found) return detail::make_yes(g, d, *found, std::move(stats), "p3p4free");
  return detail::make_no(std::move(stats), "p3p4free");
}

}  // namespace dcut
