#pragma once

#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

/// Block decomposition of a connected graph. Blocks are maximal 2-connected
/// vertex sets or cut-edges; two blocks share at most one vertex, which is
/// then a cut vertex.
struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
  /// No block is a single edge.
  bool is_strict = false;

  /// Blocks that contain exactly one cut vertex.
  std::vector<std::size_t> leaves() const;
};

/// Blocks of every component of g; isolated vertices belong to no block.
/// Order: by discovery in a DFS from the lowest unvisited vertex.
std::vector<VertexSet> biconnected_blocks(const Graph& g);

/// Articulation points of g (over all components).
VertexSet cut_vertices(const Graph& g);

/// Throws PreconditionError unless g is connected with order >= 2.
BlockCutTree block_cut_decompose(const Graph& g);

/// Block count summed over components (isolated vertices contribute none).
int block_count(const Graph& g);

bool is_two_connected(const Graph& g);

}  // namespace extremal
