#include "extremal/blocks.hpp"

#include <algorithm>
#include <array>

namespace extremal {

namespace {

// Hopcroft-Tarjan with an explicit edge stack.
struct BlockFinder {
  const Graph& g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  VertexSet cuts = 0;
  int timer = 0;

  explicit BlockFinder(const Graph& graph) : g(graph) { disc.fill(-1); }

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent != -1 || children > 1) cuts |= bit(v);
          VertexSet block = 0;
          for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
            if (e == Edge{v, w}) break;
          }
          blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    });
  }

  void run() {
    for (Vertex v = 0; v < g.order(); ++v)
      if (disc[v] == -1) visit(v, -1);
  }
};

}  // namespace

std::vector<std::size_t> BlockCutTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (popcount(blocks[i] & cut_vertices) == 1) out.push_back(i);
  return out;
}

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  BlockFinder finder(g);
  finder.run();
  return std::move(finder.blocks);
}

VertexSet cut_vertices(const Graph& g) {
  BlockFinder finder(g);
  finder.run();
  return finder.cuts;
}

BlockCutTree block_cut_decompose(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("block_cut_decompose: order must be at least 2");
  if (!is_connected(g)) throw PreconditionError("block_cut_decompose: graph is disconnected");
  BlockFinder finder(g);
  finder.run();
  BlockCutTree tree;
  tree.blocks = std::move(finder.blocks);
  tree.cut_vertices = finder.cuts;
  tree.is_strict = std::none_of(tree.blocks.begin(), tree.blocks.end(),
                                [](VertexSet b) { return popcount(b) == 2; });
  return tree;
}

int block_count(const Graph& g) { return static_cast<int>(biconnected_blocks(g).size()); }

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return biconnected_blocks(g).size() == 1;
}

}  // namespace extremal
