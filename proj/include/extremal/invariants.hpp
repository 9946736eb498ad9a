#pragma once

#include <optional>
#include <vector>

#include "extremal/checked.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// Number of r-vertex complete subgraphs. r=0 gives 1, r=1 the order, r=2
/// the edge count. Throws OverflowError instead of wrapping.
Count count_cliques(const Graph& g, int r);

/// A set of pairwise disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  VertexSet covered() const;
  /// Every pair is an edge of `host` and no vertex repeats.
  bool is_valid_for(const Graph& host) const;
};

/// Maximum matching by Edmonds' blossom algorithm.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

/// Size limits for the exponential path/cycle routines.
struct ExactLimits {
  int component_limit = 24;
};

/// Length of a longest cycle, 0 for forests. Works block by block; throws
/// CapacityError when a block exceeds `limits.component_limit`.
int circumference(const Graph& g, const ExactLimits& limits = {});

/// A maximum-order path as a vertex sequence (empty for the empty graph).
std::vector<Vertex> longest_path(const Graph& g, const ExactLimits& limits = {});

/// Hamiltonian cycle of G[within] as a closed vertex sequence without the
/// repeated start, beginning at the lowest vertex of `within`. Empty when
/// none exists or |within| < 3.
std::vector<Vertex> hamiltonian_cycle(const Graph& g, VertexSet within,
                                      const ExactLimits& limits = {});

/// Is there a cycle of length >= k? Cheaper than circumference when k is small
/// relative to the block sizes since it stops at the first witness.
bool has_cycle_at_least(const Graph& g, int k, const ExactLimits& limits = {});

/// {C_{>=k}, M_{s+1}}-freeness: circumference < k and matching number <= s.
bool is_free(const Graph& g, int k, int s, const ExactLimits& limits = {});

}  // namespace extremal
