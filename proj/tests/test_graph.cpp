#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcut/graph.hpp"
#include "dcut/line_graph.hpp"
#include "dcut/metrics.hpp"
#include "support/common.hpp"
#include "support/enumerate.hpp"

using namespace dcut;

TEST_CASE("graph construction and adjacency") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {3, 2}, {1, 2}});  // dup + reversed
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(2, 3));
  CHECK(!g.has_edge(0, 2));
  CHECK(!g.has_edge(1, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);

  auto es = g.edges();
  REQUIRE(es.size() == 3);
  CHECK(es[0] == Edge{0, 1});
  CHECK(es[1] == Edge{1, 2});
  CHECK(es[2] == Edge{2, 3});
  CHECK(std::is_sorted(es.begin(), es.end()));

  CHECK(g == Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 2}}));
  CHECK(!(g == Graph::from_edges(4, {{0, 1}, {1, 2}})));
}

TEST_CASE("neighbourhood set helpers") {
  Graph g = testsupport::path(5);
  Bitset mid = Bitset::of(5, {2});
  CHECK(g.neighbourhood_of_set(mid) == Bitset::of(5, {1, 3}));
  CHECK(g.closed_neighbourhood(mid) == Bitset::of(5, {1, 2, 3}));
  // Union semantics: members' own neighbours, members not excluded.
  Bitset pair = Bitset::of(5, {1, 2});
  CHECK(g.neighbourhood_of_set(pair) == Bitset::of(5, {0, 1, 2, 3}));
  CHECK(g.full_vertex_set() == Bitset::of(5, {0, 1, 2, 3, 4}));
}

TEST_CASE("induced subgraph preserves vertex order") {
  Graph w = testsupport::wheel(5);
  Bitset rim = Bitset::of(6, {1, 2, 3, 4, 5});
  auto [sub, map] = induced_subgraph(w, rim);
  CHECK(sub.vertex_count() == 5);
  CHECK(sub.edge_count() == 5);
  CHECK(testsupport::isomorphic(sub, testsupport::cycle(5)));
  CHECK(map == std::vector<int>{1, 2, 3, 4, 5});
  // New labels follow old order: rim vertex 1 -> 0, ..., 5 -> 4.
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.has_edge(0, 4));
  CHECK(!sub.has_edge(0, 2));
}

TEST_CASE("bitset operations") {
  Bitset a = Bitset::of(70, {0, 5, 63, 64, 69});
  CHECK(a.count() == 5);
  CHECK(a.test(63));
  CHECK(!a.test(62));
  CHECK(a.first() == 0);
  CHECK(a.next(0) == 5);
  CHECK(a.next(5) == 63);
  CHECK(a.next(64) == 69);
  CHECK(a.next(69) == -1);
  CHECK(a.to_vector() == std::vector<int>{0, 5, 63, 64, 69});

  Bitset b = Bitset::of(70, {5, 64});
  CHECK(b.is_subset_of(a));
  CHECK(!a.is_subset_of(b));
  CHECK(a.intersects(b));
  CHECK(a.intersection_count(b) == 2);
  CHECK((a & b) == b);
  CHECK((a | b) == a);
  CHECK((a - b) == Bitset::of(70, {0, 63, 69}));

  // complement stays inside the universe
  Bitset c = Bitset::of(70, {});
  CHECK(c.complement().count() == 70);
  CHECK(a.complement().count() == 65);
  CHECK(!a.complement().test(64));

  a.reset(5);
  CHECK(!a.test(5));
  a.clear();
  CHECK(a.none());

  // owning range keeps a temporary alive through the loop
  Bitset x = Bitset::of(8, {1, 2, 5});
  Bitset y = Bitset::of(8, {2, 5, 7});
  std::vector<int> got;
  for (int v : bits(x & y)) got.push_back(v);
  CHECK(got == std::vector<int>{2, 5});
}

TEST_CASE("distances diameter radius") {
  using testsupport::cycle;
  using testsupport::path;
  CHECK(diameter(path(5)) == 4);
  CHECK(radius(path(5)) == 2);
  CHECK(diameter(cycle(6)) == 3);
  CHECK(radius(cycle(6)) == 3);
  CHECK(diameter(testsupport::petersen()) == 2);
  CHECK(radius(testsupport::petersen()) == 2);
  CHECK(diameter(testsupport::wheel(5)) == 2);
  CHECK(radius(testsupport::wheel(5)) == 1);
  CHECK(diameter(Graph(1)) == 0);

  Graph two = Graph::from_edges(3, {{0, 1}});
  CHECK(!is_connected(two));
  CHECK(diameter(two) == kInfDist);
  CHECK(radius(two) == kInfDist);

  auto dist = bfs_distances(testsupport::path(4), 0);
  CHECK(dist == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distances(two, 0)[2] == kInfDist);

  DistanceMatrix dm(cycle(5));
  CHECK(dm.at(0, 2) == 2);
  CHECK(dm.at(0, 3) == 2);
  CHECK(dm.eccentricity(0) == 2);
}

TEST_CASE("diameter at most twice radius") {
  for (const Graph& g : testsupport::connected_graphs(6)) {
    int di = diameter(g), ra = radius(g);
    CHECK(ra <= di);
    CHECK(di <= 2 * ra);
  }
}

TEST_CASE("connected components ordering") {
  //  {0,3} path, {1}, {2,4,5} triangle
  Graph g = Graph::from_edges(6, {{0, 3}, {2, 4}, {4, 5}, {2, 5}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 3});
  CHECK(comps[1] == std::vector<int>{1});
  CHECK(comps[2] == std::vector<int>{2, 4, 5});

  auto sets = component_sets(g);
  REQUIRE(sets.size() == 3);
  CHECK(sets[0] == Bitset::of(6, {0, 3}));
  CHECK(sets[2] == Bitset::of(6, {2, 4, 5}));

  // restriction to a sub-universe
  auto within = component_sets_within(g, Bitset::of(6, {2, 4, 0}));
  REQUIRE(within.size() == 2);
  CHECK(within[0] == Bitset::of(6, {0}));
  CHECK(within[1] == Bitset::of(6, {2, 4}));
}

TEST_CASE("line graph of named graphs") {
  using testsupport::isomorphic;
  CHECK(isomorphic(line_graph(testsupport::path(4)).graph, testsupport::path(3)));
  CHECK(isomorphic(line_graph(testsupport::star(3)).graph, testsupport::cycle(3)));
  CHECK(isomorphic(line_graph(testsupport::cycle(6)).graph, testsupport::cycle(6)));

  auto lp = line_graph(testsupport::petersen());
  CHECK(lp.graph.vertex_count() == 15);
  CHECK(lp.graph.edge_count() == 30);
  for (int v = 0; v < 15; ++v) CHECK(lp.graph.degree(v) == 4);
}

TEST_CASE("line graph vertex order and degree identity") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testsupport::random_connected(4 + int(rng() % 6), 0.4, rng);
    auto lg = line_graph(g);
    REQUIRE(lg.edges == g.edges());  // vertex i of L(g) is the i-th canonical edge
    CHECK(lg.graph.vertex_count() == g.edge_count());
    for (std::size_t i = 0; i < lg.edges.size(); ++i) {
      auto [u, v] = lg.edges[i];
      CHECK(lg.graph.degree(int(i)) == g.degree(u) + g.degree(v) - 2);
    }
    // adjacency in L(g) <=> shared endpoint
    for (std::size_t i = 0; i < lg.edges.size(); ++i)
      for (std::size_t j = i + 1; j < lg.edges.size(); ++j) {
        auto [a, b] = lg.edges[i];
        auto [c, d] = lg.edges[j];
        bool share = a == c || a == d || b == c || b == d;
        CHECK(lg.graph.has_edge(int(i), int(j)) == share);
      }
  }
}
