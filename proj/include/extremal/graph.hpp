#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/errors.hpp"

namespace extremal {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls `fn(v)` for every member of `s` in increasing order.
template <typename Fn>
inline void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s) {
    Vertex v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

/// Simple undirected graph on at most 64 vertices, one adjacency word per
/// vertex. Plain value type: add_edge/remove_edge are the only mutators.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  VertexSet vertices() const noexcept { return low_bits(order_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1; }
  int edge_count() const noexcept;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;
  /// Same graph with vertex v renamed to perm[v].
  Graph permuted(std::span<const Vertex> perm) const;

  /// Raw adjacency rows; rows at or above order() are zero.
  const std::array<VertexSet, kMaxVertices>& rows() const noexcept { return adj_; }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

enum class PrimitiveKind { kClique, kIndependent };

/// K_t or I_t.
Graph primitive(PrimitiveKind kind, int size);
inline Graph clique(int size) { return primitive(PrimitiveKind::kClique, size); }
inline Graph independent(int size) { return primitive(PrimitiveKind::kIndependent, size); }

/// Disjoint union; vertices of `right` are shifted by left.order().
Graph disjoint_union(const Graph& left, const Graph& right);
/// Union plus every edge between the two sides; same indexing as disjoint_union.
Graph join(const Graph& left, const Graph& right);
/// `copies` disjoint copies of `h`, copy i occupying indices [i*|h|, (i+1)*|h|).
Graph replicate(int copies, const Graph& h);

/// G/uv for an edge uv. The merged vertex takes index min(u, v); vertices
/// above max(u, v) shift down by one.
Graph contract(const Graph& g, Vertex u, Vertex v);
/// Identification of two non-adjacent vertices, same indexing as contract.
Graph identify(const Graph& g, Vertex u, Vertex v);

/// Connected components as vertex sets, ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Path P_n and cycle C_n helpers used throughout tests and generators.
Graph path_graph(int order);
Graph cycle_graph(int order);

std::string to_string(const Graph& g);

}  // namespace extremal
