#include "extremal/canonical.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace extremal {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Splits cells by neighbour counts into every cell until stable.
void refine(const Graph& g, Partition& part) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<VertexSet> masks;
    masks.reserve(part.size());
    for (const Cell& c : part) {
      VertexSet m = 0;
      for (Vertex v : c) m |= bit(v);
      masks.push_back(m);
    }
    Partition next;
    next.reserve(part.size());
    for (const Cell& c : part) {
      if (c.size() == 1) {
        next.push_back(c);
        continue;
      }
      std::map<std::vector<int>, Cell> groups;
      for (Vertex v : c) {
        std::vector<int> sig(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i) sig[i] = popcount(g.neighbors(v) & masks[i]);
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    part = std::move(next);
  }
}

std::string leaf_code(const Graph& g, const Partition& part) {
  const int n = g.order();
  std::vector<Vertex> order;
  order.reserve(n);
  for (const Cell& c : part) order.push_back(c.front());
  std::string bits;
  bits.reserve(static_cast<std::size_t>(n * (n - 1) / 16 + 1));
  unsigned char acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(order[i], order[j]) ? 1 : 0));
      if (++filled == 8) {
        bits.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) bits.push_back(static_cast<char>(acc << (8 - filled)));
  return bits;
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  return (g.neighbors(a) & ~bit(b)) == (g.neighbors(b) & ~bit(a));
}

void search(const Graph& g, const Partition& part, std::string& best) {
  auto target = std::find_if(part.begin(), part.end(), [](const Cell& c) { return c.size() > 1; });
  if (target == part.end()) {
    std::string code = leaf_code(g, part);
    if (code > best) best = std::move(code);
    return;
  }
  const std::size_t index = static_cast<std::size_t>(target - part.begin());
  std::vector<Vertex> tried;
  for (Vertex v : *target) {
    if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
    tried.push_back(v);
    Partition child;
    child.reserve(part.size() + 1);
    child.insert(child.end(), part.begin(), part.begin() + static_cast<long>(index));
    child.push_back({v});
    Cell rest;
    for (Vertex w : *target)
      if (w != v) rest.push_back(w);
    child.push_back(std::move(rest));
    child.insert(child.end(), part.begin() + static_cast<long>(index) + 1, part.end());
    refine(g, child);
    search(g, child, best);
  }
}

}  // namespace

std::string canonical_code(const Graph& g, std::span<const int> colors, int limit) {
  const int n = g.order();
  if (n > limit)
    throw CapacityError("canonical_code: order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  if (!colors.empty() && static_cast<int>(colors.size()) != n)
    throw PreconditionError("canonical_code: color vector size does not match order");

  std::map<int, Cell> by_color;
  for (Vertex v = 0; v < n; ++v) by_color[colors.empty() ? 0 : colors[v]].push_back(v);
  Partition part;
  std::string header(1, static_cast<char>(n));
  for (auto& [color, members] : by_color) {
    // Color values and class sizes are part of the code.
    header += std::to_string(color) + ":" + std::to_string(members.size()) + ";";
    part.push_back(std::move(members));
  }
  if (n == 0) return header;
  refine(g, part);
  std::string best;
  search(g, part, best);
  return header + '|' + best;
}

}  // namespace extremal
