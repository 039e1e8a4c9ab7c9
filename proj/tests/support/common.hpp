#pragma once

#include <random>
#include <vector>

#include "dcut/cnf.hpp"
#include "dcut/colouring.hpp"
#include "dcut/graph.hpp"

// Named small graphs and seeded random helpers shared across the tests.

namespace testsupport {

dcut::Graph path(int n);
dcut::Graph cycle(int n);
dcut::Graph clique(int n);
dcut::Graph star(int leaves);
dcut::Graph petersen();
// Wheel: hub 0 joined to a cycle 1..n.
dcut::Graph wheel(int rim);

// Seeded G(n,p) conditioned on connectivity (retries until connected).
dcut::Graph random_connected(int n, double p, std::mt19937_64& rng);

// Random partial colouring with roughly `frac` of the vertices coloured.
dcut::PartialColouring random_precolouring(int n, double frac, std::mt19937_64& rng);

// Fixed phase-coverage regression instances (see test_solvers for their
// stories): a 3d+1 clique with pendants forcing the deep P5 search, glued to
// a 2d+2 clique region that drives the big-clique red branch.
dcut::Graph p5_deep_instance(int d);

// The worked 6-variable split formula used as the reduction's running
// example: x1..x6, positive clauses {123,134,256,456}, negative
// {124,135,246,356}. Valid (2+2 occurrences) and satisfiable.
dcut::CnfInstance figure_split_instance();

}  // namespace testsupport
