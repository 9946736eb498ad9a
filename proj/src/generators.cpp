#include "extremal/generators.hpp"

#include <algorithm>

#include "extremal/invariants.hpp"

namespace extremal {

namespace {

// Uniform integer in [lo, hi] from the raw engine output so results do not
// depend on the standard library's distribution implementation.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(i) - 1))]);
}

Graph relabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  shuffle(rng, perm);
  return g.permuted(perm);
}

void check_bounds(const InstanceBounds& b) {
  if (b.min_order < 1 || b.min_order > b.max_order)
    throw PreconditionError("random_instance: need 1 <= min_order <= max_order");
  if (b.max_order > kMaxVertices)
    throw CapacityError("random_instance: max_order exceeds capacity");
}

Graph free_graph(std::mt19937_64& rng, const InstanceBounds& b) {
  if (b.k < 3 || b.s < 0) throw PreconditionError("random_instance: need k >= 3 and s >= 0");
  const int n = draw(rng, b.min_order, b.max_order);
  Graph g(n);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  shuffle(rng, pairs);
  const int target = draw(rng, 0, static_cast<int>(pairs.size()));
  int kept = 0;
  for (auto [u, v] : pairs) {
    if (kept == target) break;
    g.add_edge(u, v);
    if (is_free(g, b.k, b.s)) {
      ++kept;
    } else {
      g.remove_edge(u, v);
    }
  }
  return g;
}

Instance block_tree(std::mt19937_64& rng, const InstanceBounds& b) {
  if (b.min_block < 3 || b.min_block > b.max_block || b.max_blocks < 1)
    throw PreconditionError("random_instance: need 3 <= min_block <= max_block and max_blocks >= 1");
  if (1 + b.max_blocks * (b.max_block - 1) > kMaxVertices)
    throw CapacityError("random_instance: block tree bounds exceed capacity");
  std::vector<int> sizes;
  for (int m = b.min_block; m <= b.max_block; ++m)
    if (!b.odd_blocks_only || m % 2 == 1) sizes.push_back(m);
  if (sizes.empty()) throw PreconditionError("random_instance: no admissible block size");

  const int blocks = draw(rng, 1, b.max_blocks);
  std::vector<Edge> edges;
  int order = 0;
  for (int i = 0; i < blocks; ++i) {
    const int m = sizes[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(sizes.size()) - 1))];
    // Global ids of the block's vertices; after the first block one of them
    // is an existing vertex.
    std::vector<Vertex> ids;
    if (i == 0) {
      for (int j = 0; j < m; ++j) ids.push_back(j);
      order = m;
    } else {
      for (int j = 0; j < m - 1; ++j) ids.push_back(order + j);
      ids.push_back(draw(rng, 0, order - 1));
      order += m - 1;
    }
    shuffle(rng, ids);
    if (coin(rng, 0.5)) {
      for (int a = 0; a < m; ++a)
        for (int c = a + 1; c < m; ++c) edges.emplace_back(ids[a], ids[c]);
    } else {
      for (int a = 0; a < m; ++a) edges.emplace_back(ids[a], ids[(a + 1) % m]);
    }
  }
  Graph g(order, edges);
  g = relabel(rng, g);
  Instance out{g, block_cut_decompose(g)};
  return out;
}

Graph two_connected(std::mt19937_64& rng, const InstanceBounds& b) {
  const int n = draw(rng, std::max(3, b.min_order), std::max(3, b.max_order));
  Graph g(n);
  int used = draw(rng, 3, n);
  for (Vertex v = 0; v < used; ++v) g.add_edge(v, (v + 1) % used);
  while (used < n) {
    const Vertex a = draw(rng, 0, used - 1);
    Vertex c = draw(rng, 0, used - 2);
    if (c >= a) ++c;
    const int internal = draw(rng, 1, n - used);
    Vertex prev = a;
    for (int i = 0; i < internal; ++i) {
      g.add_edge(prev, used);
      prev = used++;
    }
    g.add_edge(prev, c);
  }
  const double chord = 0.3 * static_cast<double>(rng() % 1000) / 1000.0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng, chord)) g.add_edge(u, v);
  return relabel(rng, g);
}

Graph connected(std::mt19937_64& rng, const InstanceBounds& b) {
  const int n = draw(rng, b.min_order, b.max_order);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(draw(rng, 0, v - 1), v);
  const double extra = 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng, extra)) g.add_edge(u, v);
  return relabel(rng, g);
}

}  // namespace

Instance random_instance(InstanceKind kind, std::uint64_t seed, const InstanceBounds& bounds) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case InstanceKind::kFreeGraph:
      check_bounds(bounds);
      return {free_graph(rng, bounds), std::nullopt};
    case InstanceKind::kBlockTree:
      return block_tree(rng, bounds);
    case InstanceKind::kTwoConnected:
      check_bounds(bounds);
      return {two_connected(rng, bounds), std::nullopt};
    case InstanceKind::kConnected:
      check_bounds(bounds);
      return {connected(rng, bounds), std::nullopt};
  }
  throw PreconditionError("random_instance: unknown kind");
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t trial) {
  // splitmix64 of base + trial
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace extremal
