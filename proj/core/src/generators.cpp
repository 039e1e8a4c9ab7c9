#include "dcut/generators.hpp"

#include <algorithm>
#include <numeric>

#include "dcut/errors.hpp"
#include "dcut/metrics.hpp"
#include "dcut/patterns.hpp"

namespace dcut {

std::string to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::Connected: return "connected";
    case GraphClass::Diameter2: return "diam2";
    case GraphClass::P5Free: return "p5free";
    case GraphClass::P3P4Free: return "p3p4free";
  }
  return "?";
}

std::optional<GraphClass> graph_class_from_name(const std::string& name) {
  if (name == "connected") return GraphClass::Connected;
  if (name == "diam2" || name == "diameter2") return GraphClass::Diameter2;
  if (name == "p5free") return GraphClass::P5Free;
  if (name == "p3p4free") return GraphClass::P3P4Free;
  return std::nullopt;
}

bool in_class(const Graph& g, GraphClass cls) {
  if (!is_connected(g)) return false;
  switch (cls) {
    case GraphClass::Connected: return true;
    case GraphClass::Diameter2: return diameter(g) <= 2;
    case GraphClass::P5Free: return is_free(g, PatternId::P5);
    case GraphClass::P3P4Free: return is_free(g, PatternId::P3plusP4);
  }
  return false;
}

Graph gnp(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

GraphGenerator::GraphGenerator(GraphClass cls, const GeneratorConfig& cfg)
    : cls_(cls), cfg_(cfg), rng_(cfg.seed) {}

std::optional<Graph> GraphGenerator::next() {
  std::uniform_real_distribution<double> pick_p(cfg_.p_min, cfg_.p_max);
  while (attempts_ < cfg_.max_attempts) {
    ++attempts_;
    Graph g = gnp(cfg_.n, pick_p(rng_), rng_);
    if (in_class(g, cls_)) {
      ++accepted_;
      return g;
    }
  }
  return std::nullopt;
}

std::optional<Graph> random_p3p4_with_p5(int n, Rng& rng, int max_attempts) {
  if (n < 5)
    throw PreconditionError("random_p3p4_with_p5: needs n >= 5 to hold a P5");
  std::uniform_real_distribution<double> core_p(0.4, 1.0), cross_p(0.2, 0.8);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < 5; ++i) edges.push_back({i, i + 1});
    const double pc = core_p(rng), px = cross_p(rng);
    std::bernoulli_distribution core_coin(pc), cross_coin(px);
    for (int u = 5; u < n; ++u) {
      for (int v = u + 1; v < n; ++v)
        if (core_coin(rng)) edges.push_back({u, v});
      // never touch the 5-path's internal pairs, so it stays induced
      for (int v = 0; v < 5; ++v)
        if (cross_coin(rng)) edges.push_back({v, u});
    }
    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g) || !is_free(g, PatternId::P3plusP4)) continue;
    // scramble the labels so the planted structure leaves no index pattern
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (const Edge& e : g.edges()) {
      int u = perm[e.first], v = perm[e.second];
      relabelled.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph::from_edges(n, relabelled);
  }
  return std::nullopt;
}

void for_each_labeled_connected(int n,
                                const std::function<bool(const Graph&)>& cb) {
  if (n < 1 || n > 7)
    throw GuardError("for_each_labeled_connected: n = " + std::to_string(n) +
                     " outside 1..7");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  const int np = static_cast<int>(pairs.size());
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << np); ++mask) {
    edges.clear();
    for (int i = 0; i < np; ++i)
      if ((mask >> i) & 1) edges.push_back(pairs[i]);
    if (static_cast<int>(edges.size()) < n - 1) continue;
    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;
    if (!cb(g)) return;
  }
}

CnfInstance random_nae_instance(int n_vars, int n_clauses, Rng& rng) {
  if (n_vars < 3)
    throw PreconditionError("random_nae_instance: needs at least 3 variables");
  CnfInstance inst;
  inst.n_vars = n_vars;
  inst.flavour = CnfFlavour::NaeAllPositive;
  std::uniform_int_distribution<int> pick(0, n_vars - 1);
  for (int c = 0; c < n_clauses; ++c) {
    Clause cl;
    cl.positive = true;
    cl.vars[0] = pick(rng);
    do cl.vars[1] = pick(rng);
    while (cl.vars[1] == cl.vars[0]);
    do cl.vars[2] = pick(rng);
    while (cl.vars[2] == cl.vars[0] || cl.vars[2] == cl.vars[1]);
    std::sort(cl.vars.begin(), cl.vars.end());
    inst.clauses.push_back(cl);
  }
  return inst;
}

std::optional<CnfInstance> random_split_instance(int n_vars, Rng& rng,
                                                 int max_attempts) {
  if (n_vars < 6 || n_vars % 3 != 0)
    throw PreconditionError(
        "random_split_instance: n_vars must be >= 6 and divisible by 3");
  auto draw_side = [&](bool positive,
                       std::vector<Clause>& out) {  // true on success
    std::vector<int> pool;
    for (int x = 0; x < n_vars; ++x) {
      pool.push_back(x);
      pool.push_back(x);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    out.clear();
    for (std::size_t i = 0; i < pool.size(); i += 3) {
      Clause c;
      c.positive = positive;
      c.vars = {pool[i], pool[i + 1], pool[i + 2]};
      if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] ||
          c.vars[1] == c.vars[2])
        return false;
      std::sort(c.vars.begin(), c.vars.end());
      out.push_back(c);
    }
    return true;
  };
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Clause> pos, neg;
    if (!draw_side(true, pos) || !draw_side(false, neg)) continue;
    CnfInstance inst;
    inst.n_vars = n_vars;
    inst.flavour = CnfFlavour::SplitPosNeg;
    inst.clauses = pos;
    inst.clauses.insert(inst.clauses.end(), neg.begin(), neg.end());
    CnfValidation v = validate_instance(inst);
    if (!v.ok)
      throw StructuralError(
          "random_split_instance: configuration model produced an invalid "
          "instance: " + v.violations.front());
    return inst;
  }
  return std::nullopt;
}

}  // namespace dcut
