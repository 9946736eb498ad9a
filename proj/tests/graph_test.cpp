#include <doctest.h>

#include <random>

#include "extremal/graph.hpp"
#include "test_support.hpp"

using namespace extremal;

TEST_CASE("primitives") {
  CHECK(clique(4).edge_count() == 6);
  CHECK(independent(5).edge_count() == 0);
  CHECK(independent(5).order() == 5);
  Graph empty = clique(0);
  CHECK(empty.order() == 0);
  CHECK(empty.edge_count() == 0);
  CHECK(clique(64).edge_count() == 64 * 63 / 2);
  CHECK_THROWS_AS(clique(65), CapacityError);
  CHECK_THROWS_AS(independent(65), CapacityError);
}

TEST_CASE("union") {
  Graph two_triangles = disjoint_union(clique(3), clique(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(two_triangles.has_edge(3, 5));
  CHECK_FALSE(two_triangles.has_edge(2, 3));

  std::mt19937_64 rng(1);
  Graph g = testing::random_graph(rng, 9, 0.4);
  CHECK(disjoint_union(g, Graph{}) == g);
  CHECK(disjoint_union(Graph{}, g) == g);

  Graph mixed = disjoint_union(clique(3), independent(2));
  CHECK(mixed.order() == 5);
  CHECK(mixed.edge_count() == 3);
  CHECK_THROWS_AS(disjoint_union(clique(40), clique(25)), CapacityError);
}

TEST_CASE("join") {
  Graph c4 = join(independent(2), independent(2));
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(join(clique(1), cycle_graph(4)).edge_count() == 8);
  Graph star = join(clique(1), independent(9));
  CHECK(star.edge_count() == 9);
  CHECK(star.degree(0) == 9);
  CHECK_THROWS_AS(join(independent(33), independent(32)), CapacityError);
}

TEST_CASE("replicate") {
  CHECK(replicate(2, clique(3)) == disjoint_union(clique(3), clique(3)));
  CHECK(replicate(0, clique(5)).order() == 0);
  Graph m3 = replicate(3, clique(2));
  CHECK(m3.order() == 6);
  CHECK(m3.edge_count() == 3);
  CHECK(m3.has_edge(4, 5));
  CHECK_THROWS_AS(replicate(9, clique(8)), CapacityError);
}

TEST_CASE("contract") {
  CHECK(contract(path_graph(3), 1, 2) == clique(2));
  CHECK(contract(clique(3), 0, 2) == clique(2));
  Graph c4 = contract(cycle_graph(5), 2, 3);
  CHECK(c4.order() == 4);
  CHECK(c4.edge_count() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK_THROWS_AS(contract(path_graph(3), 0, 2), PreconditionError);
}

TEST_CASE("identify") {
  CHECK(identify(independent(2), 0, 1) == clique(1));
  Graph bowtie = identify(replicate(2, clique(3)), 0, 3);
  CHECK(bowtie.order() == 5);
  CHECK(bowtie.edge_count() == 6);
  CHECK(bowtie.degree(0) == 4);
  CHECK(identify(path_graph(4), 0, 3) == clique(3));
  CHECK_THROWS_AS(identify(clique(3), 0, 1), PreconditionError);
}

TEST_CASE("merging never adds edges and drops exactly one vertex") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 10, 0.5);
    for (auto [u, v] : g.edges()) {
      Graph h = contract(g, u, v);
      CHECK(h.order() == g.order() - 1);
      CHECK(h.edge_count() <= g.edge_count() - 1);
    }
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (!g.has_edge(u, v)) {
          Graph h = identify(g, u, v);
          CHECK(h.order() == g.order() - 1);
          CHECK(h.edge_count() <= g.edge_count());
        }
  }
}

TEST_CASE("adjacency stays symmetric and irreflexive") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 20, 0.3);
    g = join(g, testing::random_graph(rng, trial % 7, 0.5));
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK_FALSE(g.has_edge(v, v));
      CHECK((g.neighbors(v) & ~g.vertices()) == 0);
      for_each_vertex(g.neighbors(v), [&](Vertex w) { CHECK(g.has_edge(w, v)); });
    }
  }
}

TEST_CASE("components and induced subgraphs") {
  Graph g = disjoint_union(clique(3), disjoint_union(independent(1), path_graph(2)));
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == 0b000111);
  CHECK(comps[1] == 0b001000);
  CHECK(comps[2] == 0b110000);
  CHECK(g.induced(0b110101) == disjoint_union(clique(2), path_graph(2)));
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(Graph{}));
}
