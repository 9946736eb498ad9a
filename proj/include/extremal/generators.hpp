#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "extremal/blocks.hpp"
#include "extremal/graph.hpp"

namespace extremal {

enum class InstanceKind { kFreeGraph, kBlockTree, kTwoConnected, kConnected };

struct InstanceBounds {
  int min_order = 3;
  int max_order = 12;
  // kFreeGraph target family
  int k = 5;
  int s = 2;
  // kBlockTree shape
  int max_blocks = 6;
  int min_block = 3;
  int max_block = 9;
  bool odd_blocks_only = true;
};

struct Instance {
  Graph graph;
  std::optional<BlockCutTree> tree;  ///< set for kBlockTree
};

/// Deterministic for a fixed (kind, seed, bounds). Throws PreconditionError
/// or CapacityError for unusable bounds.
///
/// kFreeGraph: random edge order, each edge kept only if the graph stays
///   {C_{>=k}, M_{s+1}}-free, stopping at a random target size.
/// kBlockTree: strict block-cut tree of cliques/cycles glued at random
///   vertices, blocks of odd order unless odd_blocks_only is false.
/// kTwoConnected: random ear decomposition plus chords.
/// kConnected: random spanning tree plus random extra edges.
Instance random_instance(InstanceKind kind, std::uint64_t seed, const InstanceBounds& bounds);

/// Seeds derived from a base seed; trial i of a run with base seed b uses
/// instance_seed(b, i) so every reported instance can be regenerated alone.
std::uint64_t instance_seed(std::uint64_t base, std::uint64_t trial);

}  // namespace extremal
