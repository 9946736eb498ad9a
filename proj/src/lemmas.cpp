#include "extremal/lemmas.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "extremal/graph6.hpp"

namespace extremal {

namespace {

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for_each_vertex(s, [&](Vertex v) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  });
  return out + "}";
}

std::string path_to_string(const std::vector<Vertex>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "-" : "") + std::to_string(path[i]);
  return out;
}

// Lexicographic order on sorted vertex lists.
bool lex_less(VertexSet a, VertexSet b) {
  while (a && b) {
    Vertex va = lowest(a), vb = lowest(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

bool is_clique(const Graph& g, VertexSet s) {
  bool ok = true;
  for_each_vertex(s, [&](Vertex v) { ok = ok && ((g.neighbors(v) | bit(v)) & s) == s; });
  return ok;
}

// Pairs consecutive vertices of `cycle` after rotating it to start at `skip`;
// the cycle has odd length so everything but `skip` is covered.
void match_around(const std::vector<Vertex>& cycle, Vertex skip, Matching& out) {
  auto at = std::find(cycle.begin(), cycle.end(), skip);
  const std::size_t start = static_cast<std::size_t>(at - cycle.begin());
  for (std::size_t i = 1; i + 1 < cycle.size(); i += 2)
    out.edges.emplace_back(cycle[(start + i) % cycle.size()], cycle[(start + i + 1) % cycle.size()]);
}

struct BlockCycle {
  VertexSet block;
  std::vector<Vertex> cycle;
};

void near_perfect(std::vector<BlockCycle> blocks, Vertex v, Matching& out) {
  if (blocks.size() == 1) {
    match_around(blocks[0].cycle, v, out);
    return;
  }
  // A block-leaf shares exactly one vertex with the union of the others.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    VertexSet others = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (j != i) others |= blocks[j].block;
    VertexSet shared = blocks[i].block & others;
    if (popcount(shared) != 1) continue;
    const Vertex cut = lowest(shared);
    BlockCycle leaf = std::move(blocks[i]);
    blocks.erase(blocks.begin() + static_cast<long>(i));
    if (leaf.block & ~bit(cut) & bit(v)) {
      match_around(leaf.cycle, v, out);
      near_perfect(std::move(blocks), cut, out);
    } else {
      match_around(leaf.cycle, cut, out);
      near_perfect(std::move(blocks), v, out);
    }
    return;
  }
  throw PreconditionError("near_perfect_matching_excluding: block structure has no block-leaf");
}

}  // namespace

std::string to_string(BinomOutcome outcome) {
  switch (outcome) {
    case BinomOutcome::kHolds: return "holds";
    case BinomOutcome::kHoldsStrictly: return "holds_strictly";
    case BinomOutcome::kViolated: return "violated";
    case BinomOutcome::kPreconditionFailed: return "precondition_failed";
  }
  return "?";
}

BinomOutcome binom_inequality_check(std::int64_t r, std::int64_t w, std::int64_t x, std::int64_t y,
                                    std::int64_t z) {
  if (r < 2 || w < 0 || x < 0 || y < 0 || z < 0) return BinomOutcome::kPreconditionFailed;
  if (x + y != w + z || x < w || x < z || x < r) return BinomOutcome::kPreconditionFailed;
  auto c = [&](std::int64_t m) { return binomial(static_cast<Count>(m), static_cast<Count>(r)); };
  const Count lhs = checked_add(c(x), c(y));
  const Count rhs = checked_add(c(w), c(z));
  if (lhs > rhs) return BinomOutcome::kHoldsStrictly;
  if (lhs == rhs) return BinomOutcome::kHolds;
  return BinomOutcome::kViolated;
}

Matching near_perfect_matching_excluding(const Graph& g, const BlockCutTree& tree, Vertex v,
                                         const ExactLimits& limits) {
  if (v < 0 || v >= g.order())
    throw PreconditionError("near_perfect_matching_excluding: vertex out of range");
  if (tree.blocks.empty()) throw PreconditionError("near_perfect_matching_excluding: no blocks");
  VertexSet covered = 0;
  std::vector<BlockCycle> blocks;
  for (std::size_t i = 0; i < tree.blocks.size(); ++i) {
    const VertexSet b = tree.blocks[i];
    const std::string name = "block " + std::to_string(i) + " " + set_to_string(b);
    if (popcount(b) == 2) throw PreconditionError(name + " is a cut-edge (tree is not strict)");
    if (popcount(b) % 2 == 0) throw PreconditionError(name + " has even order");
    auto cycle = hamiltonian_cycle(g, b, limits);
    if (cycle.empty()) throw PreconditionError(name + " is not Hamiltonian");
    blocks.push_back({b, std::move(cycle)});
    covered |= b;
  }
  if (covered != g.vertices())
    throw PreconditionError("near_perfect_matching_excluding: blocks do not cover the graph");
  Matching m;
  near_perfect(std::move(blocks), v, m);
  return m;
}

Graph block_cut_star_of(std::span<const Graph> blocks) {
  long total = 1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].order() < 2 || !is_connected(blocks[i]))
      throw PreconditionError("block_cut_star_of: block " + std::to_string(i) +
                              " must be connected with order >= 2");
    total += blocks[i].order() - 1;
  }
  if (total > kMaxVertices)
    throw CapacityError("block_cut_star_of: star of order " + std::to_string(total) +
                        " exceeds capacity");
  Graph star(blocks.empty() ? 0 : static_cast<int>(total));
  int next = 1;
  for (const Graph& b : blocks) {
    auto map = [&](Vertex local) { return local == 0 ? 0 : next + local - 1; };
    for (auto [u, w] : b.edges()) star.add_edge(map(u), map(w));
    next += b.order() - 1;
  }
  return star;
}

std::vector<Graph> block_graphs(const Graph& g, const BlockCutTree& tree) {
  std::vector<Graph> out;
  out.reserve(tree.blocks.size());
  for (VertexSet b : tree.blocks) out.push_back(g.induced(b));
  return out;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

std::string DiracKopylovReport::witness() const {
  std::ostringstream os;
  os << "path=" << path_to_string(path) << " dirac=" << to_string(dirac) << "(|P|=" << path.size()
     << ">=" << dirac_bound << ")";
  os << " kopylov=" << to_string(kopylov);
  if (kopylov != CheckStatus::kSkipped) os << "(c=" << circumference << ">=" << kopylov_bound << ")";
  if (!note.empty()) os << " note=" << note;
  return os.str();
}

DiracKopylovReport dirac_kopylov_check(const Graph& g, const ExactLimits& limits) {
  DiracKopylovReport report;
  if (g.order() == 0 || !is_connected(g)) {
    report.note = "disconnected";
    return report;
  }
  report.path = longest_path(g, limits);
  const Vertex u = report.path.front(), v = report.path.back();
  const int path_order = static_cast<int>(report.path.size());
  report.dirac_bound = std::min(g.order(), g.degree(u) + g.degree(v) + 1);
  report.dirac = path_order >= report.dirac_bound ? CheckStatus::kPass : CheckStatus::kFail;

  if (!is_two_connected(g)) {
    report.note = "not 2-connected";
    return report;
  }
  VertexSet on_path = 0;
  for (Vertex w : report.path) on_path |= bit(w);
  const int du = popcount(g.neighbors(u) & on_path);
  const int dv = popcount(g.neighbors(v) & on_path);
  report.kopylov_bound = std::min(path_order, du + dv);  // |E(P)| + 1 == |V(P)|
  report.circumference = circumference(g, limits);
  report.kopylov =
      report.circumference >= report.kopylov_bound ? CheckStatus::kPass : CheckStatus::kFail;
  return report;
}

ContractionReport contraction_closure_check(const Graph& g, int k, int s, const ExactLimits& limits) {
  if (!is_free(g, k, s, limits))
    throw PreconditionError("contraction_closure_check: input graph is not free");
  ContractionReport report;
  for (auto [u, v] : g.edges()) {
    ++report.edges_checked;
    if (!is_free(contract(g, u, v), k, s, limits)) {
      report.violation = Edge{u, v};
      break;
    }
  }
  return report;
}

std::optional<std::string> stability_violation(const Graph& g, const StabilityPartition& part, int p) {
  const VertexSet all = g.vertices();
  if ((part.x | part.y | part.z) != all || (part.x & part.y) || (part.x & part.z) || (part.y & part.z))
    return "X, Y, Z do not partition the vertex set";
  if (popcount(part.x) != p - 1) return "|X| != p-1";
  if (!is_clique(g, part.x)) return "G[X] is not complete";
  std::optional<std::string> bad;
  for_each_vertex(part.y, [&](Vertex y) {
    if (!bad && g.neighbors(y) != part.x)
      bad = "vertex " + std::to_string(y) + " in Y has neighbourhood other than X";
  });
  for_each_vertex(part.z, [&](Vertex z) {
    if (bad) return;
    if (g.degree(z) < p) bad = "vertex " + std::to_string(z) + " in Z has degree below p";
    else if (g.neighbors(z) & part.y)
      bad = "vertex " + std::to_string(z) + " in Z has a neighbour in Y";
  });
  return bad;
}

std::optional<StabilityPartition> stability_decompose(const Graph& g, int p) {
  if (p < 3) throw PreconditionError("stability_decompose: p must be at least 3");
  const VertexSet all = g.vertices();
  auto try_x = [&](VertexSet x) -> std::optional<StabilityPartition> {
    StabilityPartition part;
    part.x = x;
    for_each_vertex(all & ~x, [&](Vertex v) {
      if (g.neighbors(v) == x) part.y |= bit(v);
    });
    part.z = all & ~x & ~part.y;
    if (stability_violation(g, part, p)) return std::nullopt;
    return part;
  };

  // Candidates with nonempty Y are neighbourhoods of degree-(p-1) vertices.
  std::map<VertexSet, int> y_count;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == p - 1 && is_clique(g, g.neighbors(v))) ++y_count[g.neighbors(v)];
  std::vector<std::pair<VertexSet, int>> candidates(y_count.begin(), y_count.end());
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return lex_less(a.first, b.first);
  });
  for (const auto& [x, count] : candidates)
    if (auto part = try_x(x)) return part;

  // |Y| = 0: every vertex of degree < p must sit in X.
  VertexSet low = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < p) low |= bit(v);
  if (popcount(low) > p - 1) return std::nullopt;
  // Enumerate (p-1)-cliques containing `low` in lexicographic order.
  std::optional<StabilityPartition> found;
  auto extend = [&](auto&& self, VertexSet chosen, VertexSet cand) -> void {
    if (found) return;
    if (popcount(chosen) == p - 1) {
      if ((chosen & low) == low) found = try_x(chosen);
      return;
    }
    while (cand && !found) {
      Vertex v = lowest(cand);
      cand &= cand - 1;
      self(self, chosen | bit(v), cand & g.neighbors(v));
    }
  };
  extend(extend, 0, all);
  return found;
}

PhiPotential phi_potential(const Graph& g, const StabilityPartition& part, PhiVariant variant) {
  if (auto bad = stability_violation(g, part, popcount(part.x) + 1))
    throw PreconditionError("phi_potential: invalid partition: " + *bad);
  PhiPotential phi;
  phi.e = static_cast<Count>(g.edge_count());
  phi.k3 = count_cliques(g, 3);
  const Count cz = components(g.induced(part.z)).size();
  phi.cz_plus_y = cz + static_cast<Count>(popcount(part.y));
  if (variant == PhiVariant::kQuadruple) phi.cz = cz;
  return phi;
}

std::vector<Edge> exceptional_edges(const Graph& g, const StabilityPartition& part) {
  if (auto bad = stability_violation(g, part, popcount(part.x) + 1))
    throw PreconditionError("exceptional_edges: invalid partition: " + *bad);
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    if (!(part.z & bit(u)) || !(part.z & bit(v))) continue;
    if ((g.neighbors(u) & part.x) == part.x && (g.neighbors(v) & part.x) == part.x)
      out.emplace_back(u, v);
  }
  return out;
}

std::string LemmaRecord::to_line() const {
  return lemma + '\t' + std::to_string(seed) + '\t' + (graph6.empty() ? "-" : graph6) + '\t' +
         (passed ? "PASS" : "FAIL") + '\t' + witness;
}

LemmaRecord LemmaRecord::from_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) throw ParseError("lemma record: expected 5 fields", line.size());
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  fields.push_back(line.substr(pos));
  LemmaRecord rec;
  rec.lemma = fields[0];
  try {
    rec.seed = std::stoull(std::string(fields[1]));
  } catch (const std::exception&) {
    throw ParseError("lemma record: bad seed", fields[0].size() + 1);
  }
  rec.graph6 = fields[2] == "-" ? "" : std::string(fields[2]);
  if (fields[3] != "PASS" && fields[3] != "FAIL")
    throw ParseError("lemma record: status must be PASS or FAIL", pos - 1 - fields[3].size());
  rec.passed = fields[3] == "PASS";
  rec.witness = fields[4];
  return rec;
}

}  // namespace extremal
