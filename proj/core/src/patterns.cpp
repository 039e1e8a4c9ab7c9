#include "dcut/patterns.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dcut/errors.hpp"

namespace dcut {

namespace {

Graph path_graph(int t) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < t; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(t, es);
}

Graph cycle_graph(int r) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < r; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(0, r - 1);
  return Graph::from_edges(r, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

}  // namespace

Graph pattern_graph(PatternId id) {
  switch (id) {
    case PatternId::P1: return path_graph(1);
    case PatternId::P2: return path_graph(2);
    case PatternId::P3: return path_graph(3);
    case PatternId::P4: return path_graph(4);
    case PatternId::P5: return path_graph(5);
    case PatternId::P6: return path_graph(6);
    case PatternId::P7: return path_graph(7);
    case PatternId::K1_3: return star_graph(3);
    case PatternId::K1_4: return star_graph(4);
    case PatternId::C3: return cycle_graph(3);
    case PatternId::C4: return cycle_graph(4);
    case PatternId::C5: return cycle_graph(5);
    case PatternId::C6: return cycle_graph(6);
    case PatternId::C7: return cycle_graph(7);
    case PatternId::ThreeP2:
      return Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    case PatternId::P3plusP4:
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
    case PatternId::P5plusP1:
      return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    case PatternId::P5plus2P1:
      return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  }
  throw PreconditionError("unknown pattern id");
}

std::string pattern_name(PatternId id) {
  switch (id) {
    case PatternId::P1: return "P1";
    case PatternId::P2: return "P2";
    case PatternId::P3: return "P3";
    case PatternId::P4: return "P4";
    case PatternId::P5: return "P5";
    case PatternId::P6: return "P6";
    case PatternId::P7: return "P7";
    case PatternId::K1_3: return "K1,3";
    case PatternId::K1_4: return "K1,4";
    case PatternId::C3: return "C3";
    case PatternId::C4: return "C4";
    case PatternId::C5: return "C5";
    case PatternId::C6: return "C6";
    case PatternId::C7: return "C7";
    case PatternId::ThreeP2: return "3P2";
    case PatternId::P3plusP4: return "P3+P4";
    case PatternId::P5plusP1: return "P5+P1";
    case PatternId::P5plus2P1: return "P5+2P1";
  }
  return "?";
}

std::vector<PatternId> all_pattern_ids() {
  return {PatternId::P1,   PatternId::P2,    PatternId::P3,       PatternId::P4,
          PatternId::P5,   PatternId::P6,    PatternId::P7,       PatternId::K1_3,
          PatternId::K1_4, PatternId::C3,    PatternId::C4,       PatternId::C5,
          PatternId::C6,   PatternId::C7,    PatternId::ThreeP2,  PatternId::P3plusP4,
          PatternId::P5plusP1, PatternId::P5plus2P1};
}

std::optional<PatternId> pattern_from_name(const std::string& name) {
  for (PatternId id : all_pattern_ids())
    if (pattern_name(id) == name) return id;
  if (name == "claw" || name == "K1_3") return PatternId::K1_3;
  if (name == "K1_4") return PatternId::K1_4;
  if (name == "3P2" || name == "3K2") return PatternId::ThreeP2;
  if (name == "P3P4") return PatternId::P3plusP4;
  return std::nullopt;
}

namespace {

// Pattern-vertex visit order: greedily prefer vertices with the most already
// placed neighbours (ties: higher degree, then index). Keeps the search
// connected where the pattern allows it.
std::vector<int> placement_order(const Graph& h) {
  int k = h.vertex_count();
  std::vector<int> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    int best = -1, best_nb = -1, best_deg = -1;
    for (int v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int nb = 0;
      for (int u : order) nb += h.has_edge(u, v) ? 1 : 0;
      int deg = h.degree(v);
      if (nb > best_nb || (nb == best_nb && deg > best_deg)) {
        best = v; best_nb = nb; best_deg = deg;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }
  return order;
}

struct Embedder {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;        // pattern vertices in placement order
  std::vector<int> image;        // image[pattern vertex] or -1
  Bitset used;
  const std::function<bool(const std::vector<int>&)>* cb;
  std::set<std::vector<int>>* seen;  // dedup by sorted vertex set (may be null)
  bool stopped = false;

  Embedder(const Graph& g, const Graph& h)
      : g(g), h(h), order(placement_order(h)), image(h.vertex_count(), -1),
        used(g.vertex_count()), cb(nullptr), seen(nullptr) {}

  bool feasible(int hv, int gv) const {
    if (used.test(gv)) return false;
    if (g.degree(gv) < h.degree(hv)) return false;
    for (int prev = 0; prev < h.vertex_count(); ++prev) {
      if (image[prev] < 0 || prev == hv) continue;
      if (h.has_edge(hv, prev) != g.has_edge(gv, image[prev])) return false;
    }
    return true;
  }

  void run(std::size_t depth) {
    if (stopped) return;
    if (depth == order.size()) {
      std::vector<int> key(image);
      std::sort(key.begin(), key.end());
      if (seen && !seen->insert(key).second) return;
      if (!(*cb)(image)) stopped = true;
      return;
    }
    int hv = order[depth];
    for (int gv = 0; gv < g.vertex_count(); ++gv) {
      if (!feasible(hv, gv)) continue;
      image[hv] = gv;
      used.set(gv);
      run(depth + 1);
      used.reset(gv);
      image[hv] = -1;
      if (stopped) return;
    }
  }
};

}  // namespace

void for_each_induced(const Graph& g, const Graph& h,
                      const std::function<bool(const std::vector<int>&)>& cb) {
  if (h.vertex_count() == 0 || h.vertex_count() > g.vertex_count()) return;
  Embedder e(g, h);
  std::set<std::vector<int>> seen;
  e.cb = &cb;
  e.seen = &seen;
  e.run(0);
}

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h) {
  if (h.vertex_count() == 0 || h.vertex_count() > g.vertex_count()) return std::nullopt;
  Embedder e(g, h);
  std::optional<std::vector<int>> result;
  std::function<bool(const std::vector<int>&)> cb = [&](const std::vector<int>& img) {
    result = img;
    return false;
  };
  e.cb = &cb;
  e.run(0);
  return result;
}

std::optional<std::vector<int>> find_induced(const Graph& g, PatternId id) {
  return find_induced(g, pattern_graph(id));
}

bool is_free(const Graph& g, PatternId id) { return !find_induced(g, id).has_value(); }

std::vector<std::array<int, 4>> all_induced_p4(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  int n = g.vertex_count();
  for (int b = 0; b < n; ++b) {
    for (int c : bits(g.neighbours(b))) {
      for (int a : bits(g.neighbours(b))) {
        if (a == c || g.has_edge(a, c)) continue;
        for (int d : bits(g.neighbours(c))) {
          if (d == a || d == b || a > d) continue;
          if (g.has_edge(d, b) || g.has_edge(d, a)) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dcut
