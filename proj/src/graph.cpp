#include "extremal/graph.hpp"

#include <sstream>

namespace extremal {

namespace {

void check_order(long long order, const char* what) {
  if (order < 0) throw PreconditionError(std::string(what) + ": negative order");
  if (order > kMaxVertices)
    throw CapacityError(std::string(what) + ": order " + std::to_string(order) +
                        " exceeds capacity " + std::to_string(kMaxVertices));
}

// Copies g into out at offset `shift`.
void place(Graph& out, const Graph& g, int shift) {
  for (Vertex v = 0; v < g.order(); ++v)
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (v < w) out.add_edge(v + shift, w + shift);
    });
}

Graph merge(const Graph& g, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const int n = g.order();
  // Map old index -> new index: v disappears into u.
  auto relabel = [&](Vertex x) { return x == v ? u : (x > v ? x - 1 : x); };
  Graph out(n - 1);
  for (Vertex a = 0; a < n; ++a)
    for_each_vertex(g.neighbors(a), [&](Vertex b) {
      if (a >= b) return;
      Vertex na = relabel(a), nb = relabel(b);
      if (na != nb) out.add_edge(na, nb);
    });
  return out;
}

}  // namespace

Graph::Graph(int order) {
  check_order(order, "Graph");
  order_ = order;
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_)
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order_));
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u)
    for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](Vertex v) { out.emplace_back(u, v); });
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("loops are not allowed (vertex " + std::to_string(u) + ")");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for_each_vertex(keep, [&](Vertex v) { index[v] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](Vertex v) {
    for_each_vertex(adj_[v] & keep, [&](Vertex w) {
      if (v < w) out.add_edge(index[v], index[w]);
    });
  });
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order_)
    throw PreconditionError("permutation size does not match graph order");
  Graph out(order_);
  for (Vertex v = 0; v < order_; ++v)
    for_each_vertex(adj_[v], [&](Vertex w) {
      if (v < w) out.add_edge(perm[v], perm[w]);
    });
  return out;
}

Graph primitive(PrimitiveKind kind, int size) {
  check_order(size, kind == PrimitiveKind::kClique ? "clique" : "independent set");
  Graph g(size);
  if (kind == PrimitiveKind::kClique)
    for (Vertex u = 0; u < size; ++u)
      for (Vertex v = u + 1; v < size; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& left, const Graph& right) {
  check_order(static_cast<long long>(left.order()) + right.order(), "union");
  Graph out(left.order() + right.order());
  place(out, left, 0);
  place(out, right, left.order());
  return out;
}

Graph join(const Graph& left, const Graph& right) {
  Graph out = disjoint_union(left, right);
  for (Vertex u = 0; u < left.order(); ++u)
    for (Vertex v = 0; v < right.order(); ++v) out.add_edge(u, left.order() + v);
  return out;
}

Graph replicate(int copies, const Graph& h) {
  if (copies < 0) throw PreconditionError("replicate: negative copy count");
  check_order(static_cast<long long>(copies) * h.order(), "replicate");
  Graph out(copies * h.order());
  for (int i = 0; i < copies; ++i) place(out, h, i * h.order());
  return out;
}

Graph contract(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
    throw PreconditionError("contract: " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not an edge");
  return merge(g, u, v);
}

Graph identify(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw PreconditionError("identify: need two distinct vertices");
  if (g.has_edge(u, v))
    throw PreconditionError("identify: " + std::to_string(u) + " and " + std::to_string(v) +
                            " are adjacent");
  return merge(g, u, v);
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph path_graph(int order) {
  Graph g(order);
  for (Vertex v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int order) {
  if (order < 3) throw PreconditionError("cycle needs at least 3 vertices");
  Graph g = path_graph(order);
  g.add_edge(order - 1, 0);
  return g;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", e=" << g.edge_count() << ":";
  for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
  os << ')';
  return os.str();
}

}  // namespace extremal
