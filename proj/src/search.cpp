#include "extremal/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_set>

#include "extremal/canonical.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"

namespace extremal {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

/// Vertices v such that some u-v path in g has at least `k` vertices.
VertexSet long_path_ends(const Graph& g, Vertex u, int k) {
  VertexSet comp = bit(u);
  for (VertexSet frontier = comp; frontier;) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex x) { next |= g.neighbors(x); });
    frontier = next & ~comp;
    comp |= next;
  }
  const int c = popcount(comp);
  if (c < k) return 0;
  std::vector<Vertex> local;
  std::array<int, kMaxVertices> index{};
  for_each_vertex(comp, [&](Vertex x) {
    index[x] = static_cast<int>(local.size());
    local.push_back(x);
  });
  std::vector<std::uint32_t> adj(c);
  for (int i = 0; i < c; ++i)
    for_each_vertex(g.neighbors(local[i]) & comp,
                    [&](Vertex y) { adj[i] |= std::uint32_t{1} << index[y]; });

  // reach[mask]: local endpoints x of paths from u that visit exactly `mask`.
  std::vector<std::uint32_t> reach(std::size_t{1} << c, 0);
  const std::uint32_t start = std::uint32_t{1} << index[u];
  reach[start] = start;
  std::uint32_t ends = 0;
  for (std::uint32_t mask = start; mask < reach.size(); ++mask) {
    const std::uint32_t here = reach[mask];
    if (!here) continue;
    if (std::popcount(mask) >= k) ends |= here;
    for (std::uint32_t rest = here; rest;) {
      const int x = std::countr_zero(rest);
      rest &= rest - 1;
      for (std::uint32_t out = adj[x] & ~mask; out;) {
        const int y = std::countr_zero(out);
        out &= out - 1;
        reach[mask | (std::uint32_t{1} << y)] |= std::uint32_t{1} << y;
      }
    }
  }
  VertexSet result = 0;
  for (int i = 0; i < c; ++i)
    if ((ends >> i) & 1) result |= bit(local[i]);
  return result;
}

Graph graph_union(const Graph& a, const Graph& b) {
  Graph out = a;
  for (Vertex u = 0; u < b.order(); ++u)
    for_each_vertex(b.neighbors(u) & ~low_bits(u + 1), [&](Vertex v) { out.add_edge(u, v); });
  return out;
}

/// Position of the next undecided pair in lexicographic edge order.
struct Cursor {
  Vertex row = 0;
  Vertex col = 1;

  bool operator<=(const Cursor& o) const {
    return row < o.row || (row == o.row && col <= o.col);
  }
};

int pair_index(int n, Cursor c) { return c.row * (2 * n - c.row - 1) / 2 + (c.col - c.row - 1); }

Cursor after(int n, Vertex u, Vertex v) {
  if (v + 1 < n) return {u, v + 1};
  return {u + 1, u + 2};
}

struct Node {
  Graph g;
  int nu = 0;
  Cursor cursor;
  Graph addable;  ///< undecided pairs e with g + e free
};

struct Leaf {
  Count value = 0;
  Graph graph;
};

struct Outcome {
  std::optional<Leaf> best;
  std::uint64_t nodes = 0;
  std::uint64_t maximal = 0;
};

class Explorer {
 public:
  Explorer(const SearchParams& params, bool dedup, int dedup_depth, Count lower_bound)
      : n_(static_cast<int>(params.n)),
        k_(static_cast<int>(params.k)),
        s_(static_cast<int>(params.s)),
        r_(static_cast<int>(params.r)),
        dedup_(dedup),
        dedup_depth_(dedup_depth),
        lower_bound_(lower_bound) {}

  Node root() const {
    Node node{Graph(n_), 0, {0, 1}, Graph(n_)};
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (edge_keeps_free(node.g, node.nu, u, v, nullptr)) node.addable.add_edge(u, v);
    return node;
  }

  /// Sequential prefix: explores down to `split` decided pairs and hands the
  /// remaining subtrees to `emit` in DFS order.
  template <typename Emit>
  void expand_prefix(const Node& node, int split, Outcome& out, Emit&& emit) {
    if (pair_index(n_, node.cursor) >= split) {
      if (is_duplicate(node)) {
        ++out.nodes;
        return;
      }
      emit(node);
      return;
    }
    ++out.nodes;
    if (is_duplicate(node)) return;
    branch(node, out, [&](const Node& child) { expand_prefix(child, split, out, emit); });
  }

  /// Full DFS of one subtree. The root was already checked for duplicates.
  void explore(const Node& node, Outcome& out, bool check_duplicate) {
    ++out.nodes;
    if (check_duplicate && node.cursor.col == node.cursor.row + 1 && is_duplicate(node)) return;
    branch(node, out, [&](const Node& child) { explore(child, out, true); });
  }

  void reset_seen() { seen_.clear(); }

 private:
  template <typename Recurse>
  void branch(const Node& node, Outcome& out, Recurse&& recurse) {
    const Graph reachable = graph_union(node.g, node.addable);
    const Count bound = count_cliques(reachable, r_);
    if (bound < lower_bound_) return;
    if (out.best && bound <= out.best->value) return;
    const int nu_reachable = matching_number(reachable);
    if (nu_reachable <= s_ && !has_cycle_at_least(reachable, k_)) {
      record_leaf(reachable, nu_reachable, out);
      return;
    }
    // Every completion lies inside `reachable`, which is not free, so some
    // addable pair remains.
    Vertex u = 0;
    while (!(node.addable.neighbors(u) & ~low_bits(u + 1))) ++u;
    const Vertex v = lowest(node.addable.neighbors(u) & ~low_bits(u + 1));
    const Cursor next = after(n_, u, v);

    Node with{node.g, 0, next, Graph(n_)};
    with.g.add_edge(u, v);
    with.nu = std::max(node.nu, 1 + matching_number(node.g.induced(~(bit(u) | bit(v)) & node.g.vertices())));
    std::array<VertexSet, kMaxVertices> far{};
    std::array<bool, kMaxVertices> far_known{};
    for (Vertex a = u; a < n_; ++a)
      for_each_vertex(node.addable.neighbors(a) & ~low_bits(a + 1), [&](Vertex b) {
        if (a == u && b == v) return;
        if (!far_known[a] && k_ <= n_) {
          far[a] = long_path_ends(with.g, a, k_);
          far_known[a] = true;
        }
        if (edge_keeps_free(with.g, with.nu, a, b, &far[a])) with.addable.add_edge(a, b);
      });
    recurse(with);

    Node without{node.g, node.nu, next, node.addable};
    without.addable.remove_edge(u, v);
    recurse(without);
  }

  /// Whether g + uv stays free, given that g is free with matching number nu.
  /// `far`, when given, holds long_path_ends(g, u, k).
  bool edge_keeps_free(const Graph& g, int nu, Vertex u, Vertex v, const VertexSet* far) const {
    if (nu >= s_) {
      const VertexSet rest = g.vertices() & ~(bit(u) | bit(v));
      if (1 + matching_number(g.induced(rest)) > s_) return false;
    }
    if (k_ > n_) return true;
    const VertexSet ends = far ? *far : long_path_ends(g, u, k_);
    return !(ends & bit(v));
  }

  void record_leaf(const Graph& leaf, int nu, Outcome& out) const {
    bool maximal = true;
    for (Vertex u = 0; u < n_ && maximal; ++u) {
      const VertexSet missing = ~leaf.neighbors(u) & leaf.vertices() & ~low_bits(u + 1);
      if (!missing) continue;
      const VertexSet far = k_ <= n_ ? long_path_ends(leaf, u, k_) : 0;
      for_each_vertex(missing, [&](Vertex v) {
        if (maximal && edge_keeps_free(leaf, nu, u, v, &far)) maximal = false;
      });
    }
    if (maximal) ++out.maximal;
    const Count value = count_cliques(leaf, r_);
    if (!out.best || value > out.best->value) out.best = Leaf{value, leaf};
  }

  bool is_duplicate(const Node& node) {
    if (!dedup_) return false;
    const int depth = pair_index(n_, node.cursor);
    if (dedup_depth_ >= 0 && depth > dedup_depth_) return false;
    std::vector<int> colors(n_, 0);
    const Cursor c = node.cursor;
    if (c.row < n_) {
      const bool pivot_started = c.col > c.row + 1;
      for (Vertex x = c.row; x < n_; ++x) colors[x] = 3;
      if (pivot_started) {
        colors[c.row] = 1;
        for (Vertex x = c.row + 1; x < c.col; ++x) colors[x] = 2;
      }
    }
    std::string key = std::to_string(depth) + "#" + canonical_code(node.g, colors, kHardSearchCap);
    return !seen_.insert(std::move(key)).second;
  }

  int n_, k_, s_, r_;
  bool dedup_;
  int dedup_depth_;
  Count lower_bound_;
  std::unordered_set<std::string> seen_;
};

}  // namespace

SearchParams make_search_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r) {
  if (n < 1) throw ParameterError("n = " + str(n) + " out of range: need n >= 1");
  if (k < 3) throw ParameterError("k = " + str(k) + " out of range: need k >= 3");
  if (s < 0) throw ParameterError("s = " + str(s) + " out of range: need s >= 0");
  if (r < 2) throw ParameterError("r = " + str(r) + " out of range: need r >= 2");
  return {n, k, s, r, (k - 1) / 2 + 1};
}

std::optional<Count> reference_value(const SearchParams& params) {
  if (params.k > params.n) {
    if (params.n >= 2 * params.s + 1) return matching_turan_value(params.n, params.s, params.r);
    return std::nullopt;
  }
  if (params.k < 5 || params.s < 1) return std::nullopt;
  return theorem_value(derive_params(params.n, params.k, params.s, params.r)).value;
}

Count construction_lower_bound(const SearchParams& params) {
  const int n = static_cast<int>(params.n);
  const int k = static_cast<int>(params.k);
  const int s = static_cast<int>(params.s);
  const int r = static_cast<int>(params.r);
  std::vector<Graph> candidates;
  if (2 * s + 1 <= n) candidates.push_back(disjoint_union(clique(2 * s + 1), independent(n - 2 * s - 1)));
  if (s <= n) candidates.push_back(join(clique(s), independent(n - s)));
  if (params.k >= 5 && params.s >= 1) {
    const FamilyParams fp = derive_params(params.n, params.k, params.s, params.r);
    for (Family f : kAllFamilies)
      if (!inapplicable_reason(f, fp)) candidates.push_back(build_construction(f, fp));
  }
  Count best = 0;
  for (const Graph& g : candidates)
    if (g.order() == n && is_free(g, k, s)) best = std::max(best, count_cliques(g, r));
  return best;
}

SearchRecord extremal_search(const SearchParams& params, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (options.max_order > kHardSearchCap)
    throw CapacityError("search cap " + std::to_string(options.max_order) +
                        " exceeds the hard cap " + std::to_string(kHardSearchCap));
  if (params.n > options.max_order)
    throw CapacityError("n = " + str(params.n) + " exceeds the search cap " +
                        std::to_string(options.max_order));
  const SearchParams checked = make_search_params(params.n, params.k, params.s, params.r);

  const bool dedup = options.canonical_dedup.value_or(checked.n >= 8);
  const Count lower_bound = options.construction_bound ? construction_lower_bound(checked) : 0;

  // The prefix runs sequentially with one seen-set, so the frontier (and each
  // subtask's own seen-set) is independent of the number of workers.
  Explorer prefix(checked, dedup, options.dedup_depth, lower_bound);
  Outcome head;
  std::vector<Node> tasks;
  prefix.expand_prefix(prefix.root(), std::max(0, options.split_depth), head,
                       [&](const Node& node) { tasks.push_back(node); });

  std::vector<Outcome> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Explorer explorer(checked, dedup, options.dedup_depth, lower_bound);
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      explorer.reset_seen();
      explorer.explore(tasks[i], results[i], false);
    }
  };
  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp<int>(jobs, 1, static_cast<int>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SearchRecord record;
  record.params = checked;
  record.nodes_explored = head.nodes;
  record.maximal_graphs_seen = head.maximal;
  std::optional<Leaf> best = head.best;
  for (const Outcome& o : results) {
    record.nodes_explored += o.nodes;
    record.maximal_graphs_seen += o.maximal;
    if (o.best && (!best || o.best->value > best->value)) best = o.best;
  }
  if (!best) throw IntegrityError("search finished without a witness");
  record.value = best->value;
  record.witness = encode_graph6(best->graph);
  if (auto ref = reference_value(checked))
    record.theorem_gap = static_cast<std::int64_t>(record.value) - static_cast<std::int64_t>(*ref);
  record.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

void verify_record(const SearchRecord& record) {
  const SearchParams& p = record.params;
  if (p.p != (p.k - 1) / 2 + 1)
    throw IntegrityError("record p = " + str(p.p) + " does not match k = " + str(p.k));
  Graph g;
  try {
    g = decode_graph6(record.witness);
  } catch (const ParseError& e) {
    throw IntegrityError(std::string("witness is not valid graph6: ") + e.what());
  }
  if (g.order() != p.n)
    throw IntegrityError("witness has order " + std::to_string(g.order()) + ", expected " + str(p.n));
  if (!is_free(g, static_cast<int>(p.k), static_cast<int>(p.s)))
    throw IntegrityError("witness " + record.witness + " is not free");
  const Count count = count_cliques(g, static_cast<int>(p.r));
  if (count != record.value)
    throw IntegrityError("witness has " + std::to_string(count) + " copies of K_" + str(p.r) +
                         ", record says " + std::to_string(record.value));
}

}  // namespace extremal
