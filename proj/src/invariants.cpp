#include "extremal/invariants.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>

#include "extremal/blocks.hpp"

namespace extremal {

namespace {

bool is_clique_set(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) {
    if (((g.neighbors(v) | bit(v)) & s) != s) ok = false;
  });
  return ok;
}

// Cliques of size `need` inside candidate set `cand` (all candidates are
// common neighbours of the clique chosen so far).
Count count_in(const Graph& g, VertexSet cand, int need) {
  const int size = popcount(cand);
  if (need == 0) return 1;
  if (size < need) return 0;
  if (need == 1) return static_cast<Count>(size);
  if (is_clique_set(g, cand)) return binomial(size, need);
  Count total = 0;
  VertexSet rest = cand;
  while (rest) {
    Vertex v = lowest(rest);
    rest &= rest - 1;
    if (popcount(rest) + 1 < need) break;
    total = checked_add(total, count_in(g, rest & g.neighbors(v), need - 1));
  }
  return total;
}

// Local re-indexing of a vertex subset for the subset dynamic programs.
struct LocalGraph {
  std::vector<Vertex> global;          // local -> global
  std::vector<std::uint32_t> adj;      // local adjacency masks

  LocalGraph(const Graph& g, VertexSet within) {
    std::array<int, kMaxVertices> index{};
    for_each_vertex(within, [&](Vertex v) {
      index[v] = static_cast<int>(global.size());
      global.push_back(v);
    });
    adj.resize(global.size());
    for (std::size_t i = 0; i < global.size(); ++i)
      for_each_vertex(g.neighbors(global[i]) & within,
                      [&](Vertex w) { adj[i] |= std::uint32_t{1} << index[w]; });
  }
  int size() const { return static_cast<int>(global.size()); }
};

void check_limit(int size, const ExactLimits& limits, const char* what) {
  const int hard = std::min(limits.component_limit, 30);
  if (size > hard)
    throw CapacityError(std::string(what) + ": part of size " + std::to_string(size) +
                        " exceeds exact-search limit " + std::to_string(hard));
}

// ends[mask] = vertices v such that a path from lowest(mask) to v visits exactly mask.
std::vector<std::uint32_t> rooted_path_table(const LocalGraph& lg) {
  const int c = lg.size();
  std::vector<std::uint32_t> ends(std::size_t{1} << c, 0);
  for (int i = 0; i < c; ++i) ends[std::size_t{1} << i] = std::uint32_t{1} << i;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c); ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    const int start = std::countr_zero(mask);
    std::uint32_t rest = mask & ~(std::uint32_t{1} << start);
    std::uint32_t out = 0;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (ends[mask ^ (std::uint32_t{1} << v)] & lg.adj[v]) out |= std::uint32_t{1} << v;
    }
    ends[mask] = out;
  }
  return ends;
}

std::vector<Vertex> rebuild_rooted_path(const LocalGraph& lg, const std::vector<std::uint32_t>& ends,
                                        std::uint32_t mask, int last) {
  std::vector<Vertex> path;
  for (;;) {
    path.push_back(lg.global[last]);
    std::uint32_t prev = mask ^ (std::uint32_t{1} << last);
    if (!prev) break;
    last = std::countr_zero(ends[prev] & lg.adj[last]);
    mask = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int block_circumference(const Graph& g, VertexSet block, const ExactLimits& limits, int stop_at) {
  const int size = popcount(block);
  if (size < 3) return 0;
  // A clique block is Hamiltonian.
  if (is_clique_set(g, block)) return size;
  check_limit(size, limits, "circumference");
  LocalGraph lg(g, block);
  auto ends = rooted_path_table(lg);
  int best = 0;
  for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
    int len = std::popcount(mask);
    if (len < 3 || len <= best) continue;
    if (ends[mask] & lg.adj[std::countr_zero(mask)]) {
      best = len;
      if (best >= stop_at) break;
    }
  }
  return best;
}

}  // namespace

Count count_cliques(const Graph& g, int r) {
  if (r < 0) throw PreconditionError("count_cliques: negative clique size");
  return count_in(g, g.vertices(), r);
}

VertexSet Matching::covered() const {
  VertexSet s = 0;
  for (auto [u, v] : edges) s |= bit(u) | bit(v);
  return s;
}

bool Matching::is_valid_for(const Graph& host) const {
  VertexSet seen = 0;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= host.order() || v >= host.order()) return false;
    if (!host.has_edge(u, v)) return false;
    if (seen & (bit(u) | bit(v))) return false;
    seen |= bit(u) | bit(v);
  }
  return true;
}

Matching maximum_matching(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxVertices> match, parent, base;
  match.fill(-1);

  auto lca = [&](int a, int b) {
    VertexSet seen = 0;
    for (;;) {
      a = base[a];
      seen |= bit(a);
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen & bit(b)) return b;
      b = parent[match[b]];
    }
  };

  auto find_path = [&](int root) {
    VertexSet used = bit(root);
    parent.fill(-1);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      VertexSet nbrs = g.neighbors(v);
      while (nbrs) {
        int to = lowest(nbrs);
        nbrs &= nbrs - 1;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          VertexSet blossom = 0;
          auto mark = [&](int x, int b, int child) {
            while (base[x] != b) {
              blossom |= bit(base[x]) | bit(base[match[x]]);
              parent[x] = child;
              child = match[x];
              x = parent[match[x]];
            }
          };
          mark(v, cur, to);
          mark(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom & bit(base[i])) {
              base[i] = cur;
              if (!(used & bit(i))) {
                used |= bit(i);
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used |= bit(match[to]);
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    while (u != -1) {
      int pv = parent[u];
      int next = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = next;
    }
  }

  Matching m;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) m.edges.emplace_back(v, match[v]);
  return m;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

int circumference(const Graph& g, const ExactLimits& limits) {
  int best = 0;
  for (VertexSet block : biconnected_blocks(g))
    best = std::max(best, block_circumference(g, block, limits, kMaxVertices + 1));
  return best;
}

bool has_cycle_at_least(const Graph& g, int k, const ExactLimits& limits) {
  for (VertexSet block : biconnected_blocks(g)) {
    if (popcount(block) < std::max(k, 3)) continue;
    if (block_circumference(g, block, limits, k) >= k) return true;
  }
  return false;
}

std::vector<Vertex> longest_path(const Graph& g, const ExactLimits& limits) {
  std::vector<Vertex> best;
  for (VertexSet comp : components(g)) {
    const int size = popcount(comp);
    if (size <= static_cast<int>(best.size())) continue;
    if (size == 1) {
      best = {lowest(comp)};
      continue;
    }
    check_limit(size, limits, "longest_path");
    LocalGraph lg(g, comp);
    // ends[mask] = vertices v such that some path covering exactly mask ends at v.
    std::vector<std::uint32_t> ends(std::size_t{1} << size, 0);
    std::uint32_t best_mask = 1;
    for (std::uint32_t mask = 1; mask < ends.size(); ++mask) {
      if ((mask & (mask - 1)) == 0) {
        ends[mask] = mask;
        continue;
      }
      std::uint32_t rest = mask, out = 0;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (ends[mask ^ (std::uint32_t{1} << v)] & lg.adj[v]) out |= std::uint32_t{1} << v;
      }
      ends[mask] = out;
      if (out && std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
    }
    if (std::popcount(best_mask) <= static_cast<int>(best.size())) continue;
    std::vector<Vertex> path;
    std::uint32_t mask = best_mask;
    int last = std::countr_zero(ends[mask]);
    for (;;) {
      path.push_back(lg.global[last]);
      std::uint32_t prev = mask ^ (std::uint32_t{1} << last);
      if (!prev) break;
      last = std::countr_zero(ends[prev] & lg.adj[last]);
      mask = prev;
    }
    best = std::move(path);
  }
  return best;
}

std::vector<Vertex> hamiltonian_cycle(const Graph& g, VertexSet within, const ExactLimits& limits) {
  within &= g.vertices();
  const int size = popcount(within);
  if (size < 3) return {};
  check_limit(size, limits, "hamiltonian_cycle");
  LocalGraph lg(g, within);
  auto ends = rooted_path_table(lg);
  const std::uint32_t full = static_cast<std::uint32_t>(ends.size() - 1);
  std::uint32_t closing = ends[full] & lg.adj[0];
  if (!closing) return {};
  return rebuild_rooted_path(lg, ends, full, std::countr_zero(closing));
}

bool is_free(const Graph& g, int k, int s, const ExactLimits& limits) {
  if (matching_number(g) > s) return false;
  return !has_cycle_at_least(g, k, limits);
}

}  // namespace extremal
