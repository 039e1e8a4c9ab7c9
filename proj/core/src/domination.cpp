#include "dcut/domination.hpp"

#include <algorithm>
#include <numeric>

#include "dcut/patterns.hpp"

namespace dcut {

bool dominates(const Graph& g, const Bitset& s) {
  return g.closed_neighbourhood(s) == g.full_vertex_set();
}

namespace {

// Lexicographically next k-combination of {0..n-1}, false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
  int k = int(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> min_dominating_set(const Graph& g, int cap) {
  int n = g.vertex_count();
  if (n == 0) return std::vector<int>{};
  for (int k = 1; k <= std::min(cap, n); ++k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    do {
      if (dominates(g, Bitset::of(n, c))) return c;
    } while (next_combination(c, n));
  }
  return std::nullopt;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  std::vector<int> ord;      // vertices by (degree desc, index asc)
  std::vector<int> pos;      // pos[v] = rank in ord
  Bitset all;
  std::vector<int> clique;
  Bitset clique_set;
  Bitset covered;            // N[clique]
  std::optional<std::vector<int>> found;

  explicit CliqueSearch(const Graph& g)
      : g(g), all(g.full_vertex_set()), clique_set(g.vertex_count()),
        covered(g.vertex_count()) {
    int n = g.vertex_count();
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    pos.resize(n);
    for (int i = 0; i < n; ++i) pos[ord[i]] = i;
  }

  // cand: vertices adjacent to the whole current clique with rank above the
  // last added vertex. Prune when even colouring in all of cand cannot reach
  // the uncovered vertices.
  void dfs(const Bitset& cand) {
    if (found) return;
    if (covered == all && !clique.empty()) {
      found = clique;
      return;
    }
    Bitset reach = covered;
    for (int v : bits(cand)) { reach |= g.neighbours(v); reach.set(v); }
    if (reach != all) return;
    std::vector<int> cs = cand.to_vector();
    std::sort(cs.begin(), cs.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    for (int v : cs) {
      Bitset next = cand & g.neighbours(v);
      for (int w : bits(next))
        if (pos[w] <= pos[v]) next.reset(w);
      clique.push_back(v);
      clique_set.set(v);
      Bitset saved = covered;
      covered |= g.neighbours(v);
      covered.set(v);
      dfs(next);
      covered = saved;
      clique_set.reset(v);
      clique.pop_back();
      if (found) return;
    }
  }
};

}  // namespace

std::optional<DominatingCliqueOrC5> find_dominating_clique_or_c5(const Graph& g) {
  if (g.vertex_count() == 0) return DominatingCliqueOrC5{{}, true};
  CliqueSearch cs(g);
  cs.dfs(g.full_vertex_set());
  if (cs.found) return DominatingCliqueOrC5{*cs.found, true};

  std::optional<std::vector<int>> c5;
  for_each_induced(g, pattern_graph(PatternId::C5), [&](const std::vector<int>& img) {
    if (dominates(g, Bitset::of(g.vertex_count(), img))) {
      c5 = img;
      return false;
    }
    return true;
  });
  if (c5) return DominatingCliqueOrC5{*c5, false};
  return std::nullopt;
}

}  // namespace dcut
