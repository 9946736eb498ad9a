#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "extremal/invariants.hpp"
#include "test_support.hpp"

using namespace extremal;

namespace {

// G1 for n=10, k=5, s=3 laid out by hand: apex 0, inner vertex 1, independent
// set 2..6 hanging off vertex 1, triangle 7..9, apex joined to everything.
Graph hand_built_g1() {
  Graph g(10);
  for (Vertex v = 2; v <= 6; ++v) g.add_edge(1, v);
  g.add_edge(7, 8);
  g.add_edge(7, 9);
  g.add_edge(8, 9);
  for (Vertex v = 1; v < 10; ++v) g.add_edge(0, v);
  return g;
}

// Brute-force oracles; independent of the library algorithms.
Count brute_cliques(const Graph& g, int r) {
  Count total = 0;
  const int n = g.order();
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (popcount(s) != r) continue;
    bool ok = true;
    for_each_vertex(s, [&](Vertex v) { ok = ok && ((g.neighbors(v) | bit(v)) & s) == s; });
    total += ok;
  }
  return total;
}

int brute_matching(const Graph& g, VertexSet free_vertices) {
  if (!free_vertices) return 0;
  Vertex v = lowest(free_vertices);
  VertexSet rest = free_vertices & ~bit(v);
  int best = brute_matching(g, rest);
  for_each_vertex(g.neighbors(v) & rest, [&](Vertex w) {
    best = std::max(best, 1 + brute_matching(g, rest & ~bit(w)));
  });
  return best;
}

// Longest cycle and path by plain DFS over simple paths.
std::pair<int, int> brute_cycle_path(const Graph& g) {
  int cycle = 0, path = g.order() ? 1 : 0;
  std::function<void(Vertex, Vertex, VertexSet, int)> walk = [&](Vertex start, Vertex at,
                                                                  VertexSet used, int len) {
    path = std::max(path, len);
    if (len >= 3 && g.has_edge(at, start)) cycle = std::max(cycle, len);
    for_each_vertex(g.neighbors(at) & ~used, [&](Vertex w) { walk(start, w, used | bit(w), len + 1); });
  };
  for (Vertex v = 0; v < g.order(); ++v) walk(v, v, bit(v), 1);
  return {cycle, path};
}

bool is_path(const Graph& g, const std::vector<Vertex>& p) {
  VertexSet seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen & bit(p[i])) return false;
    seen |= bit(p[i]);
    if (i && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("count_cliques examples") {
  CHECK(count_cliques(clique(4), 3) == 4);
  CHECK(count_cliques(cycle_graph(5), 2) == 5);
  Graph g1 = hand_built_g1();
  CHECK(count_cliques(g1, 3) == 9);
  CHECK(count_cliques(g1, 2) == 17);
  CHECK(count_cliques(g1, 0) == 1);
  CHECK(count_cliques(g1, 1) == 10);
  CHECK(count_cliques(clique(64), 32) == 1832624140942590534ULL);
  CHECK(count_cliques(clique(5), 6) == 0);
  CHECK_THROWS_AS(count_cliques(clique(3), -1), PreconditionError);
}

TEST_CASE("count_cliques agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 12, 0.2 + 0.6 * (trial % 5) / 4.0);
    for (int r = 0; r <= 5; ++r) CHECK(count_cliques(g, r) == brute_cliques(g, r));
  }
}

TEST_CASE("clique counts under union and join") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, trial % 9, 0.5);
    Graph h = testing::random_graph(rng, (trial * 7) % 8, 0.5);
    Graph u = disjoint_union(g, h);
    Graph j = join(g, h);
    for (int r = 1; r <= 6; ++r) CHECK(count_cliques(u, r) == count_cliques(g, r) + count_cliques(h, r));
    for (int r = 0; r <= 6; ++r) {
      Count expect = 0;
      for (int i = 0; i <= r; ++i) expect += count_cliques(g, i) * count_cliques(h, r - i);
      CHECK(count_cliques(j, r) == expect);
    }
  }
}

TEST_CASE("matching_number examples") {
  CHECK(matching_number(independent(7)) == 0);
  CHECK(matching_number(clique(5)) == 2);
  CHECK(matching_number(hand_built_g1()) == 3);
  CHECK(matching_number(replicate(3, clique(2))) == 3);
  CHECK(matching_number(Graph{}) == 0);
  // Two triangles joined by a path need a blossom to be found.
  Graph g(8);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}})
    g.add_edge(u, v);
  CHECK(matching_number(g) == 4);
}

TEST_CASE("maximum_matching is valid and optimal") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    Graph g = testing::random_graph(rng, trial % 14, 0.05 + 0.1 * (trial % 6));
    Matching m = maximum_matching(g);
    CHECK(m.is_valid_for(g));
    CHECK(static_cast<int>(m.size()) == brute_matching(g, g.vertices()));
  }
}

TEST_CASE("matching number adds over disjoint union") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, trial % 11, 0.3);
    Graph h = testing::random_graph(rng, (trial * 3) % 13, 0.2);
    CHECK(matching_number(disjoint_union(g, h)) == matching_number(g) + matching_number(h));
  }
}

TEST_CASE("circumference examples") {
  Graph tree(6);
  for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}}) tree.add_edge(u, v);
  CHECK(circumference(tree) == 0);
  CHECK(circumference(clique(4)) == 4);
  CHECK(circumference(hand_built_g1()) == 4);
  CHECK(circumference(cycle_graph(9)) == 9);
  CHECK(circumference(Graph{}) == 0);
}

TEST_CASE("circumference respects the block size limit") {
  Graph wheel = join(clique(1), cycle_graph(30));
  CHECK_THROWS_AS(circumference(wheel), CapacityError);
  CHECK_THROWS_AS(circumference(cycle_graph(9), ExactLimits{8}), CapacityError);
  CHECK(circumference(cycle_graph(9), ExactLimits{9}) == 9);
  CHECK_THROWS_AS(longest_path(path_graph(9), ExactLimits{8}), CapacityError);
  // Clique blocks never hit the limit.
  CHECK(circumference(clique(40)) == 40);
}

TEST_CASE("longest_path examples") {
  CHECK(longest_path(path_graph(5)).size() == 5);
  auto p = longest_path(disjoint_union(clique(3), clique(2)));
  CHECK(p.size() == 3);
  CHECK(longest_path(cycle_graph(6)).size() == 6);
  CHECK(longest_path(Graph{}).empty());
  CHECK(longest_path(independent(3)).size() == 1);
}

TEST_CASE("cycle and path lengths agree with DFS enumeration") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 9, 0.15 + 0.1 * (trial % 7));
    auto [cyc, len] = brute_cycle_path(g);
    CHECK(circumference(g) == cyc);
    auto path = longest_path(g);
    CHECK(static_cast<int>(path.size()) == len);
    CHECK(is_path(g, path));
    for (int k = 3; k <= 10; ++k) CHECK(has_cycle_at_least(g, k) == (cyc >= k));
  }
}

TEST_CASE("longest path ends satisfy the degree bound on connected graphs") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 11, 0.35);
    if (!is_connected(g)) continue;
    auto p = longest_path(g);
    const int bound = std::min(g.order(), g.degree(p.front()) + g.degree(p.back()) + 1);
    CHECK(static_cast<int>(p.size()) >= bound);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("circumference is monotone under subgraphs and at least the girth") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, 3 + trial % 8, 0.4);
    Graph h = g;
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); i += 2) h.remove_edge(edges[i].first, edges[i].second);
    CHECK(circumference(h) <= circumference(g));
    if (circumference(g) > 0) {
      int girth = 64;
      for (int k = 3; k <= g.order(); ++k)
        for (VertexSet s = 0; s < (VertexSet{1} << g.order()) && girth == 64; ++s)
          if (popcount(s) == k && !hamiltonian_cycle(g, s).empty()) girth = k;
      CHECK(circumference(g) >= girth);
    }
  }
}

TEST_CASE("hamiltonian_cycle") {
  auto c = hamiltonian_cycle(cycle_graph(7), 0x7F);
  REQUIRE(c.size() == 7);
  CHECK(c.front() == 0);
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(cycle_graph(7).has_edge(c[i], c[(i + 1) % 7]));
  CHECK(hamiltonian_cycle(path_graph(5), 0x1F).empty());
  CHECK(hamiltonian_cycle(clique(2), 0x3).empty());
}

TEST_CASE("is_free") {
  CHECK_FALSE(is_free(clique(5), 5, 2));
  CHECK(is_free(clique(5), 6, 2));
  CHECK(is_free(independent(20), 3, 0));
  CHECK(is_free(hand_built_g1(), 5, 3));
  CHECK_FALSE(is_free(hand_built_g1(), 4, 3));
  CHECK_FALSE(is_free(hand_built_g1(), 5, 2));
}
