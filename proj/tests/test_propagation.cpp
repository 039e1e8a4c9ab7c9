#include <doctest.h>

#include <random>

#include "dcut/branching.hpp"
#include "dcut/colouring.hpp"
#include "dcut/propagation.hpp"
#include "support/common.hpp"

using namespace dcut;

TEST_CASE("forcing rule moves an uncoloured vertex") {
  // centre sees d+1 red leaves -> forced red
  Graph s = testsupport::star(5);
  int centre = 0;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) == 5) centre = v;
  PartialColouring pc(s.vertex_count());
  int reds = 0;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (v != centre && reds < 3) {
      pc.set(v, Colour::Red);
      ++reds;
    }
  ProcessResult pr = colour_process(s, pc, 2);
  REQUIRE(pr.feasible);
  CHECK(pr.pc.at(centre) == Colour::Red);
  CHECK(pr.forced_moves >= 1);
}

TEST_CASE("opposing forces detect infeasibility") {
  // centre adjacent to 3 red and 3 blue leaves at d=2
  Graph s = testsupport::star(6);
  int centre = 0;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) == 6) centre = v;
  PartialColouring pc(s.vertex_count());
  int k = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (v == centre) continue;
    pc.set(v, k < 3 ? Colour::Red : Colour::Blue);
    ++k;
  }
  CHECK(!colour_process(s, pc, 2).feasible);
}

TEST_CASE("an overloaded coloured vertex is infeasible") {
  // blue centre with d+1 red leaves: no extension can repair it
  Graph s = testsupport::star(3);
  int centre = 0;
  for (int v = 0; v < 4; ++v)
    if (s.degree(v) == 3) centre = v;
  PartialColouring pc(4);
  pc.set(centre, Colour::Blue);
  for (int v = 0; v < 4; ++v)
    if (v != centre) pc.set(v, Colour::Red);
  CHECK(!colour_process(s, pc, 2).feasible);
  CHECK(colour_process(s, pc, 3).feasible);
}

TEST_CASE("fixpoint is stable") {
  Graph p3 = testsupport::path(3);
  PartialColouring pc(3);
  pc.set(1, Colour::Red);
  ProcessResult pr = colour_process(p3, pc, 1);
  REQUIRE(pr.feasible);
  // each end sees one red neighbour, short of the d+1=2 threshold
  CHECK(pr.pc == pc);
  CHECK(pr.forced_moves == 0);

  // idempotence on random instances
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + int(rng() % 7);
    Graph g = testsupport::random_connected(n, 0.5, rng);
    PartialColouring seed = testsupport::random_precolouring(n, 0.4, rng);
    int d = 1 + int(rng() % 3);
    ProcessResult a = colour_process(g, seed, d);
    if (!a.feasible) continue;
    ProcessResult b = colour_process(g, a.pc, d);
    REQUIRE(b.feasible);
    CHECK(b.pc == a.pc);
    CHECK(b.forced_moves == 0);
  }
}

TEST_CASE("confluence under both scan orders") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + int(rng() % 8);
    Graph g = testsupport::random_connected(n, 0.45, rng);
    PartialColouring seed = testsupport::random_precolouring(n, 0.5, rng);
    int d = 1 + int(rng() % 3);
    ProcessResult up = colour_process(g, seed, d, ScanOrder::Ascending);
    ProcessResult down = colour_process(g, seed, d, ScanOrder::Descending);
    CHECK(up.feasible == down.feasible);
    if (up.feasible && down.feasible) CHECK(up.pc == down.pc);
  }
}

TEST_CASE("extend_budgeted yields the processed seed for an empty frontier") {
  Graph p3 = testsupport::path(3);
  PartialColouring pc(3);
  pc.set(1, Colour::Red);
  auto states = extend_budgeted_all(p3, pc, Bitset(3), 1);
  REQUIRE(states.size() == 1);
  CHECK(states[0] == colour_process(p3, pc, 1).pc);
}

TEST_CASE("extend_budgeted covers exactly the consistent leaf colourings") {
  // P3 with the middle red at d=1: of the four end colourings only BB dies
  // (two blues overload the middle vertex), leaving RRR, RRB, BRR.
  Graph p3 = testsupport::path(3);
  PartialColouring pc(3);
  pc.set(1, Colour::Red);
  auto states = extend_budgeted_all(p3, pc, Bitset::of(3, {0, 2}), 1);
  REQUIRE(states.size() == 3);
  auto has = [&](Colour a, Colour c) {
    for (const auto& st : states)
      if (st.at(0) == a && st.at(1) == Colour::Red && st.at(2) == c) return true;
    return false;
  };
  CHECK(has(Colour::Red, Colour::Red));
  CHECK(has(Colour::Red, Colour::Blue));
  CHECK(has(Colour::Blue, Colour::Red));
  CHECK(!has(Colour::Blue, Colour::Blue));
}

TEST_CASE("extend_budgeted yields nothing from a dead seed") {
  Graph s = testsupport::star(6);
  int centre = 0;
  for (int v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) == 6) centre = v;
  PartialColouring pc(s.vertex_count());
  int k = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (v == centre) continue;
    pc.set(v, k < 3 ? Colour::Red : Colour::Blue);
    ++k;
  }
  CHECK(extend_budgeted_all(s, pc, Bitset::of(s.vertex_count(), {centre}), 2).empty());
}

TEST_CASE("extend_budgeted early stop") {
  Graph g = testsupport::clique(4);
  PartialColouring pc(4);
  int yields = 0;
  extend_budgeted(g, pc, g.full_vertex_set(), 2,
                  [&](const PartialColouring&) { return ++yields < 2; });
  CHECK(yields == 2);
}
