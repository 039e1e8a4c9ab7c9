#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "dcut/cnf.hpp"
#include "dcut/graph.hpp"

namespace dcut {

using Rng = std::mt19937_64;

// Classes the random generator can be asked for; membership always includes
// connectivity.
enum class GraphClass { Connected, Diameter2, P5Free, P3P4Free };

std::string to_string(GraphClass cls);
std::optional<GraphClass> graph_class_from_name(const std::string& name);

bool in_class(const Graph& g, GraphClass cls);

// One G(n,p) draw.
Graph gnp(int n, double p, Rng& rng);

struct GeneratorConfig {
  int n = 8;
  double p_min = 0.15;
  double p_max = 0.85;
  std::uint64_t seed = 1;
  long max_attempts = 1000000;  // lifetime rejection budget
};

// Rejection sampler: G(n,p) with p drawn uniformly from [p_min, p_max] per
// attempt, kept when `in_class` holds. Deterministic given the seed; next()
// returns nullopt once the attempt budget is spent.
class GraphGenerator {
 public:
  GraphGenerator(GraphClass cls, const GeneratorConfig& cfg);
  std::optional<Graph> next();
  long attempts() const { return attempts_; }
  long accepted() const { return accepted_; }
  double acceptance_rate() const {
    return attempts_ ? static_cast<double>(accepted_) / attempts_ : 0.0;
  }

 private:
  GraphClass cls_;
  GeneratorConfig cfg_;
  Rng rng_;
  long attempts_ = 0;
  long accepted_ = 0;
};

// (P3+P4)-free graphs that still contain an induced P5, i.e. members of the
// class outside the P5-free subclass. Planted: an induced 5-path kept
// chord-free plus a denser core with random internal and cross edges, then
// rejection-checked and randomly relabelled. Returns nullopt when
// max_attempts G(n,p)-style draws all fail the check.
std::optional<Graph> random_p3p4_with_p5(int n, Rng& rng,
                                         int max_attempts = 10000);

// All labeled graphs on n vertices (edge subsets), filtered to connected
// ones, in mask order; callback may return false to stop. Guarded at n <= 7.
void for_each_labeled_connected(int n,
                                const std::function<bool(const Graph&)>& cb);

// Random all-positive NAE instance: n_clauses random 3-subsets of the
// variables (sorted within each clause, duplicates across clauses possible).
CnfInstance random_nae_instance(int n_vars, int n_clauses, Rng& rng);

// Random valid SplitPosNeg instance via the configuration model: each
// variable placed twice in the positive pool and twice in the negative pool,
// pools shuffled and cut into triples, redrawn while any triple repeats a
// variable. Requires n_vars >= 6 and divisible by 3 (so p = q = 2n/3 >= 4).
// The gadget-side certification (e.g. diameter 3) is the caller's filter.
std::optional<CnfInstance> random_split_instance(int n_vars, Rng& rng,
                                                 int max_attempts = 10000);

}  // namespace dcut
