#include "dcut/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "dcut/domination.hpp"
#include "dcut/errors.hpp"

namespace dcut {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
  const Graph& g;
  int d;
  const OracleLimits& lim;
  SolveStats stats;
  std::optional<Clock::time_point> deadline;
  bool timed_out = false;
  std::optional<PartialColouring> found;

  Search(const Graph& g, int d, const OracleLimits& lim) : g(g), d(d), lim(lim) {
    if (lim.time_budget_ms)
      deadline = Clock::now() + std::chrono::microseconds(std::int64_t(*lim.time_budget_ms * 1000));
  }

  bool out_of_time() {
    if (deadline && Clock::now() > *deadline) { timed_out = true; return true; }
    return false;
  }

  int pick(const PartialColouring& pc, const Bitset& open) const {
    Bitset coloured = pc.red() | pc.blue();
    int best = -1, best_cnt = -1;
    for (int v : bits(open)) {
      int cnt = g.neighbours(v).intersection_count(coloured);
      if (cnt > best_cnt) { best = v; best_cnt = cnt; }
    }
    return best;
  }

  bool leaf_ok(const PartialColouring& pc) const {
    if (!pc.red().any() || !pc.blue().any()) return false;
    if (!lim.propagate) return validate_colouring(g, pc, d).ok;
    return true;  // propagation already enforced the budgets
  }

  // Returns true when a solution was found (stop unwinding).
  bool dfs(const PartialColouring& pc, bool first_branch) {
    if (timed_out || out_of_time()) return false;
    Bitset open = pc.uncoloured();
    if (open.none()) {
      if (leaf_ok(pc)) { found = pc; return true; }
      return false;
    }
    int v = pick(pc, open);
    stats.bump("oracle");
    for (Colour c : {Colour::Red, Colour::Blue}) {
      if (first_branch && lim.symmetry_break && c == Colour::Blue) break;
      PartialColouring next = pc;
      next.set(v, c);
      if (lim.propagate) {
        ++stats.propagation_calls;
        ProcessResult pr = colour_process(g, std::move(next), d);
        if (!pr.feasible) continue;
        if (dfs(pr.pc, false)) return true;
      } else {
        if (dfs(next, false)) return true;
      }
      if (timed_out) return false;
    }
    return false;
  }
};

}  // namespace

OracleOutcome oracle_solve_status(const Graph& g, int d, const PartialColouring& pc,
                                  const OracleLimits& lim) {
  if (g.vertex_count() > lim.max_n)
    throw GuardError("oracle guard: n=" + std::to_string(g.vertex_count()) + " exceeds " +
                     std::to_string(lim.max_n));
  if (d < 0) throw PreconditionError("d must be non-negative");

  PartialColouring start = pc.universe_size() == 0 ? PartialColouring(g.vertex_count()) : pc;
  if (start.universe_size() != g.vertex_count())
    throw PreconditionError("precolouring universe does not match the graph");

  OracleOutcome out;
  auto t0 = Clock::now();
  Search s(g, d, lim);
  bool root_free = start.coloured_count() == 0;
  bool proceed = true;
  if (lim.propagate) {
    ++s.stats.propagation_calls;
    ProcessResult pr = colour_process(g, start, d);
    if (!pr.feasible)
      proceed = false;
    else
      start = pr.pc;
  }
  if (proceed) s.dfs(start, root_free);

  out.stats = s.stats;
  out.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (s.timed_out && !s.found) {
    out.status = OracleStatus::Timeout;
  } else if (s.found) {
    out.status = OracleStatus::Yes;
    out.certificate = cut_from_colouring(g, s.found->red(), s.found->blue(), d);
  } else {
    out.status = OracleStatus::No;
  }
  return out;
}

std::optional<DCutCertificate> oracle_solve(const Graph& g, int d, const OracleLimits& lim) {
  return oracle_solve(g, d, PartialColouring(g.vertex_count()), lim);
}

std::optional<DCutCertificate> oracle_solve(const Graph& g, int d, const PartialColouring& pc,
                                            const OracleLimits& lim) {
  OracleOutcome out = oracle_solve_status(g, d, pc, lim);
  if (out.status == OracleStatus::Timeout) throw Error("oracle timed out");
  if (out.status == OracleStatus::Yes) return out.certificate;
  return std::nullopt;
}

std::optional<EdgeColouring> edge_oracle_solve(const Graph& g, int d, const OracleLimits& lim) {
  auto es = g.edges();
  int m = int(es.size());
  if (m > lim.max_edges)
    throw GuardError("edge oracle guard: m=" + std::to_string(m) + " exceeds " +
                     std::to_string(lim.max_edges));
  if (m == 0) return std::nullopt;

  // Edge adjacency by shared endpoint.
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[i];
      auto [x, y] = es[j];
      if (a == x || a == y || b == x || b == y) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }

  std::vector<Colour> col(m, Colour::None);
  std::vector<int> opp(m, 0);  // opposite-coloured adjacent edges per edge

  std::function<bool(int)> dfs = [&](int i) -> bool {
    if (i == m) {
      bool has_red = false, has_blue = false;
      for (Colour c : col) (c == Colour::Red ? has_red : has_blue) = true;
      return has_red && has_blue;
    }
    for (Colour c : {Colour::Red, Colour::Blue}) {
      if (i == 0 && c == Colour::Blue) break;  // swap symmetry
      col[i] = c;
      bool ok = true;
      for (int j : adj[i])
        if (col[j] == opposite(c)) {
          ++opp[i];
          ++opp[j];
          if (opp[j] > d) ok = false;
        }
      if (opp[i] > d) ok = false;
      if (ok && dfs(i + 1)) return true;
      for (int j : adj[i])
        if (col[j] == opposite(c)) {
          --opp[i];
          --opp[j];
        }
      opp[i] = 0;
      col[i] = Colour::None;
    }
    return false;
  };

  if (!dfs(0)) return std::nullopt;
  EdgeColouring ec;
  for (int i = 0; i < m; ++i) ec[es[i]] = col[i];
  return ec;
}

std::optional<DCutCertificate> solve_with_dominating_set(const Graph& g,
                                                         const std::vector<int>& dom, int d,
                                                         SolveStats* stats) {
  int n = g.vertex_count();
  Bitset dom_set = Bitset::of(n, dom);
  if (!dominates(g, dom_set)) throw PreconditionError("given set does not dominate the graph");

  std::vector<int> ds = dom;
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  int k = int(ds.size());

  // Budget check limited to the vertices whose counts may have changed.
  auto locally_ok = [&](const PartialColouring& pc, const Bitset& changed) {
    Bitset affected = g.closed_neighbourhood(changed);
    for (int v : bits(affected)) {
      Colour c = pc.at(v);
      if (c == Colour::None) continue;
      if (g.neighbours(v).intersection_count(pc.side(opposite(c))) > d) return false;
    }
    return true;
  };

  std::optional<DCutCertificate> result;

  // Depth = position in ds; each red dominating vertex flips <= d of its
  // currently uncoloured neighbours blue, the rest red (symmetrically blue).
  std::function<bool(const PartialColouring&, int)> complete =
      [&](const PartialColouring& pc, int depth) -> bool {
    if (depth == k) {
      auto val = validate_colouring(g, pc, d);
      if (!val.ok) return false;
      result = cut_from_colouring(g, pc.red(), pc.blue(), d);
      return true;
    }
    int u = ds[depth];
    Colour cu = pc.at(u);
    std::vector<int> unc;
    for (int w : bits(g.neighbours(u) & pc.uncoloured())) unc.push_back(w);
    int t = int(unc.size());
    // Subsets of size 0..d, sizes ascending, lexicographic within a size.
    for (int sz = 0; sz <= std::min(d, t); ++sz) {
      std::vector<int> idx(sz);
      for (int i = 0; i < sz; ++i) idx[i] = i;
      while (true) {
        if (stats) stats->bump("domset");
        PartialColouring next = pc;
        Bitset changed(n);
        std::vector<bool> flip(t, false);
        for (int i : idx) flip[i] = true;
        for (int i = 0; i < t; ++i) {
          next.set(unc[i], flip[i] ? opposite(cu) : cu);
          changed.set(unc[i]);
        }
        if (locally_ok(next, changed) && complete(next, depth + 1)) return true;
        // advance combination
        int i = sz - 1;
        while (i >= 0 && idx[i] == t - sz + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (sz == 0 && t == 0) break;  // single empty subset
    }
    return false;
  };

  // All 2^k colourings of the dominating set, mask ascending; bit i set means
  // ds[i] is blue.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (stats) stats->bump("domset_mask");
    PartialColouring pc(n);
    for (int i = 0; i < k; ++i)
      pc.set(ds[i], (mask >> i) & 1 ? Colour::Blue : Colour::Red);
    if (!locally_ok(pc, dom_set)) continue;
    if (complete(pc, 0)) return result;
  }
  return std::nullopt;
}

}  // namespace dcut
