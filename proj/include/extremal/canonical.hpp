#pragma once

#include <span>
#include <string>

#include "extremal/graph.hpp"

namespace extremal {

inline constexpr int kDefaultCanonicalLimit = 12;

/// Byte string equal for two graphs iff they are isomorphic. With `colors`
/// (one entry per vertex) isomorphisms must also preserve colors.
///
/// Vertices are first split by color and then by iterated neighbour counts
/// (equitable refinement); remaining ties are resolved by trying every
/// individualization and keeping the largest adjacency string. Branches on
/// twin vertices are skipped since swapping twins is an automorphism.
std::string canonical_code(const Graph& g, std::span<const int> colors = {},
                           int limit = kDefaultCanonicalLimit);

}  // namespace extremal
