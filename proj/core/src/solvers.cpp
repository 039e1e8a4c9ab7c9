#include "dcut/solvers.hpp"

#include <algorithm>

#include "dcut/domination.hpp"
#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"
#include "solver_internal.hpp"

namespace dcut {

namespace detail {

SolveOutcome make_yes(const Graph& g, int d, const PartialColouring& pc, SolveStats stats,
                      const std::string& algorithm) {
  auto val = validate_colouring(g, pc, d);
  if (!val.ok) {
    std::string msg = algorithm + ": solver produced an invalid colouring:";
    for (const auto& v : val.violations) msg += " [" + v.message + "]";
    throw StructuralError(msg);
  }
  SolveOutcome out;
  out.yes = true;
  out.certificate = cut_from_colouring(g, pc.red(), pc.blue(), d);
  out.stats = std::move(stats);
  out.algorithm = algorithm;
  return out;
}

SolveOutcome make_no(SolveStats stats, const std::string& algorithm) {
  SolveOutcome out;
  out.yes = false;
  out.stats = std::move(stats);
  out.algorithm = algorithm;
  return out;
}

void structural_fail(const std::string& algorithm, const std::string& what) {
  throw StructuralError(algorithm + ": " + what +
                        " (implementation bug or undetected class-membership violation)");
}

bool is_clique(const Graph& g, const Bitset& s) {
  int k = s.count();
  for (int v : bits(s))
    if (g.neighbours(v).intersection_count(s) != k - 1) return false;
  return true;
}

std::string vertex_list(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

bool lemma21_complete(const Graph& g, const std::vector<int>& dom, int d, PartialColouring pc,
                      const std::function<bool(const PartialColouring&)>& yield,
                      SolveStats* stats, const std::string& phase) {
  int n = g.vertex_count();

  auto locally_ok = [&](const PartialColouring& state, const Bitset& changed) {
    Bitset affected = g.closed_neighbourhood(changed);
    for (int v : bits(affected)) {
      Colour c = state.at(v);
      if (c == Colour::None) continue;
      if (g.neighbours(v).intersection_count(state.side(opposite(c))) > d) return false;
    }
    return true;
  };

  int k = int(dom.size());
  // Returns false when the yield chain asked to stop.
  std::function<bool(const PartialColouring&, int)> walk =
      [&](const PartialColouring& state, int depth) -> bool {
    if (depth == k) return yield(state);
    int u = dom[depth];
    Colour cu = state.at(u);
    if (cu == Colour::None)
      structural_fail(phase, "dominating vertex " + std::to_string(u) +
                                 " uncoloured in a Lemma-2.1 completion");
    std::vector<int> unc;
    for (int w : bits(g.neighbours(u) & state.uncoloured())) unc.push_back(w);
    int t = int(unc.size());
    for (int sz = 0; sz <= std::min(d, t); ++sz) {
      std::vector<int> idx(sz);
      for (int i = 0; i < sz; ++i) idx[i] = i;
      while (true) {
        if (stats) stats->bump(phase);
        PartialColouring next = state;
        Bitset changed(n);
        std::vector<bool> flip(t, false);
        for (int i : idx) flip[i] = true;
        for (int i = 0; i < t; ++i) {
          next.set(unc[i], flip[i] ? opposite(cu) : cu);
          changed.set(unc[i]);
        }
        if (locally_ok(next, changed) && !walk(next, depth + 1)) return false;
        int i = sz - 1;
        while (i >= 0 && idx[i] == t - sz + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (t == 0) break;  // only the empty subset exists
    }
    return true;
  };

  return walk(pc, 0);
}

}  // namespace detail

using namespace detail;

SolveOutcome solve_h_plus_p1(const Graph& g, PatternId h, int d, const InnerSolver& inner) {
  Timer timer;
  if (d < 1) throw PreconditionError("solve_h_plus_p1 requires d >= 1");
  if (!is_connected(g)) throw PreconditionError("solve_h_plus_p1 requires a connected graph");
  const std::string algo = "h+p1[" + pattern_name(h) + "]";

  auto copy = find_induced(g, h);
  if (!copy) return inner(g, d);

  int n = g.vertex_count();
  Bitset u = Bitset::of(n, *copy);
  Bitset undominated = g.closed_neighbourhood(u).complement();
  if (undominated.any()) {
    throw PreconditionError("not (" + pattern_name(h) + "+P1)-free: the induced copy " +
                            vertex_list(*copy) + " together with vertex " +
                            std::to_string(undominated.first()) + " induces " + pattern_name(h) +
                            "+P1");
  }

  SolveStats stats;
  auto cert = solve_with_dominating_set(g, *copy, d, &stats);
  stats.wall_time_ms = timer.ms();
  if (cert) {
    auto pc = PartialColouring::of(n, cert->red, cert->blue);
    return make_yes(g, d, pc, std::move(stats), algo);
  }
  return make_no(std::move(stats), algo);
}

SolveOutcome solve_auto(const Graph& g, int d, const AutoOptions& opts) {
  Timer timer;
  if (d < 1) throw PreconditionError("solve_auto requires d >= 1");
  if (!is_connected(g)) throw PreconditionError("solve_auto requires a connected graph");
  int n = g.vertex_count();

  if (auto dom = min_dominating_set(g, 3 * d)) {
    SolveStats stats;
    auto cert = solve_with_dominating_set(g, *dom, d, &stats);
    stats.wall_time_ms = timer.ms();
    if (cert) {
      auto pc = PartialColouring::of(n, cert->red, cert->blue);
      return make_yes(g, d, pc, std::move(stats), "domset");
    }
    return make_no(std::move(stats), "domset");
  }

  if (d >= 2) {
    if (diameter(g) <= 2) return solve_diameter2(g, d);
    if (is_free(g, PatternId::P5)) return solve_p5_free(g, d);
    if (is_free(g, PatternId::P3plusP4)) return solve_p3p4_free(g, d);
    InnerSolver p5 = [](const Graph& gg, int dd) { return solve_p5_free(gg, dd); };
    if (is_free(g, PatternId::P5plusP1)) return solve_h_plus_p1(g, PatternId::P5, d, p5);
    if (is_free(g, PatternId::P5plus2P1)) {
      InnerSolver p5p1 = [&p5](const Graph& gg, int dd) {
        return solve_h_plus_p1(gg, PatternId::P5, dd, p5);
      };
      return solve_h_plus_p1(g, PatternId::P5plusP1, d, p5p1);
    }
  }

  if (n <= opts.oracle_limits.max_n) {
    OracleOutcome oo = oracle_solve_status(g, d, PartialColouring{}, opts.oracle_limits);
    if (oo.status == OracleStatus::Timeout)
      throw Error("solve_auto: oracle fallback timed out");
    oo.stats.wall_time_ms = timer.ms();
    if (oo.status == OracleStatus::Yes) {
      auto pc = PartialColouring::of(n, oo.certificate->red, oo.certificate->blue);
      return make_yes(g, d, pc, std::move(oo.stats), "oracle");
    }
    return make_no(std::move(oo.stats), "oracle");
  }

  throw UnsupportedError(
      "no implemented class matches this instance (n = " + std::to_string(n) +
      ", d = " + std::to_string(d) + "): domination number exceeds 3d, diameter exceeds 2, and "
      "the graph is none of P5-free, (P3+P4)-free, (P5+P1)-free, (P5+2P1)-free; n exceeds the "
      "oracle guard of " + std::to_string(opts.oracle_limits.max_n));
}

}  // namespace dcut
