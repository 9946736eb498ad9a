#include "extremal/lemma_runs.hpp"

#include <algorithm>
#include <cctype>

#include "extremal/blocks.hpp"
#include "extremal/errors.hpp"
#include "extremal/generators.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"

namespace extremal {

namespace {

struct Cell {
  int k;
  int s;
};

Cell free_graph_cell(const TrialConfig& config, int trial) {
  return {config.k.value_or(5 + trial % 3), config.s.value_or(2 + (trial / 3) % 3)};
}

InstanceBounds order_bounds(const TrialConfig& config) {
  InstanceBounds b;
  b.max_order = config.max_order;
  b.min_order = std::min(b.min_order, b.max_order);
  return b;
}

LemmaRecord record_for(LemmaId id, std::uint64_t seed, const Graph& g) {
  return {lemma_name(id), seed, encode_graph6(g), true, ""};
}

LemmaRecord dirac_trial(const TrialConfig& config, int trial, std::uint64_t seed) {
  const InstanceKind kind = trial % 2 == 0 ? InstanceKind::kConnected : InstanceKind::kTwoConnected;
  const Instance inst = random_instance(kind, seed, order_bounds(config));
  LemmaRecord rec = record_for(LemmaId::kDiracKopylov, seed, inst.graph);
  const DiracKopylovReport report = dirac_kopylov_check(inst.graph);
  rec.passed = report.passed();
  rec.witness = report.witness();
  return rec;
}

LemmaRecord near_perfect_trial(const TrialConfig& config, std::uint64_t seed) {
  InstanceBounds b = order_bounds(config);
  b.max_order = kMaxVertices;
  const Instance inst = random_instance(InstanceKind::kBlockTree, seed, b);
  LemmaRecord rec = record_for(LemmaId::kNearPerfect, seed, inst.graph);
  const Graph& g = inst.graph;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Matching m = near_perfect_matching_excluding(g, *inst.tree, v);
    if (!m.is_valid_for(g) || m.covered() != (g.vertices() & ~bit(v))) {
      rec.passed = false;
      rec.witness = "v=" + std::to_string(v) + " covered=" + std::to_string(popcount(m.covered()));
      return rec;
    }
  }
  rec.witness = "order=" + std::to_string(g.order()) +
                " blocks=" + std::to_string(inst.tree->blocks.size()) +
                " matchings=" + std::to_string(g.order());
  return rec;
}

LemmaRecord star_trial(const TrialConfig& config, std::uint64_t seed) {
  InstanceBounds b = order_bounds(config);
  b.max_order = kMaxVertices;
  b.odd_blocks_only = false;
  const Instance inst = random_instance(InstanceKind::kBlockTree, seed, b);
  LemmaRecord rec = record_for(LemmaId::kStar, seed, inst.graph);
  const std::vector<Graph> blocks = block_graphs(inst.graph, *inst.tree);
  const int nu = matching_number(inst.graph);
  const int nu_star = matching_number(block_cut_star_of(blocks));
  rec.passed = nu >= nu_star;
  rec.witness = "nu=" + std::to_string(nu) + " nu_star=" + std::to_string(nu_star);
  return rec;
}

LemmaRecord contraction_trial(const TrialConfig& config, int trial, std::uint64_t seed) {
  const Cell cell = free_graph_cell(config, trial);
  InstanceBounds b = order_bounds(config);
  b.k = cell.k;
  b.s = cell.s;
  const Instance inst = random_instance(InstanceKind::kFreeGraph, seed, b);
  LemmaRecord rec = record_for(LemmaId::kContraction, seed, inst.graph);
  const ContractionReport report = contraction_closure_check(inst.graph, cell.k, cell.s);
  rec.passed = report.passed();
  rec.witness = "k=" + std::to_string(cell.k) + " s=" + std::to_string(cell.s) +
                " edges=" + std::to_string(report.edges_checked);
  if (report.violation)
    rec.witness += " violation=" + std::to_string(report.violation->first) + "-" +
                   std::to_string(report.violation->second);
  return rec;
}

LemmaRecord stability_trial(const TrialConfig& config, int trial, std::uint64_t seed) {
  const Cell cell = free_graph_cell(config, trial);
  InstanceBounds b = order_bounds(config);
  b.k = cell.k;
  b.s = cell.s;
  const Instance inst = random_instance(InstanceKind::kFreeGraph, seed, b);
  LemmaRecord rec = record_for(LemmaId::kStability, seed, inst.graph);
  const int p = (cell.k - 1) / 2 + 1;
  const auto part = stability_decompose(inst.graph, p);
  rec.witness = "p=" + std::to_string(p);
  if (!part) {
    rec.witness += " absent";
    return rec;
  }
  if (auto why = stability_violation(inst.graph, *part, p)) {
    rec.passed = false;
    rec.witness += " " + *why;
    return rec;
  }
  rec.witness += " |X|=" + std::to_string(popcount(part->x)) +
                 " |Y|=" + std::to_string(popcount(part->y)) + " t0=" + std::to_string(part->t0());
  return rec;
}

TrialSummary binom_sweep(const TrialConfig& config,
                         const std::function<void(const LemmaRecord&)>& sink) {
  TrialSummary summary;
  const int m = config.binom_max;
  for (int r = 0; r <= m; ++r)
    for (int w = 0; w <= m; ++w)
      for (int x = 0; x <= m; ++x)
        for (int y = 0; y <= m; ++y)
          for (int z = 0; z <= m; ++z) {
            const BinomOutcome out = binom_inequality_check(r, w, x, y, z);
            if (out == BinomOutcome::kPreconditionFailed) continue;
            ++summary.checked;
            const bool strict_needed = x > w && x > z;
            const bool ok = out == BinomOutcome::kHoldsStrictly ||
                            (out == BinomOutcome::kHolds && !strict_needed);
            if (ok) continue;
            ++summary.failed;
            sink({lemma_name(LemmaId::kBinom), config.seed, "", false,
                  "r=" + std::to_string(r) + " w=" + std::to_string(w) + " x=" + std::to_string(x) +
                      " y=" + std::to_string(y) + " z=" + std::to_string(z) + " " + to_string(out)});
          }
  return summary;
}

}  // namespace

std::string lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::kDiracKopylov: return "dirac-kopylov";
    case LemmaId::kBinom: return "binom";
    case LemmaId::kNearPerfect: return "near-perfect";
    case LemmaId::kStar: return "star";
    case LemmaId::kContraction: return "contraction";
    case LemmaId::kStability: return "stability";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma(std::string_view text) {
  for (LemmaId id : kAllLemmas)
    if (lemma_name(id) == text) return id;
  return std::nullopt;
}

TrialSummary run_lemma_trials(LemmaId id, const TrialConfig& config,
                              const std::function<void(const LemmaRecord&)>& sink) {
  if (config.trials < 0) throw ParameterError("trials must be nonnegative");
  if (config.max_order < 3 || config.max_order > kMaxVertices)
    throw ParameterError("max order must lie in [3, 64]");
  if (id == LemmaId::kBinom) return binom_sweep(config, sink);
  TrialSummary summary;
  for (int i = 0; i < config.trials; ++i) {
    const std::uint64_t seed = instance_seed(config.seed, static_cast<std::uint64_t>(i));
    LemmaRecord rec;
    switch (id) {
      case LemmaId::kDiracKopylov: rec = dirac_trial(config, i, seed); break;
      case LemmaId::kNearPerfect: rec = near_perfect_trial(config, seed); break;
      case LemmaId::kStar: rec = star_trial(config, seed); break;
      case LemmaId::kContraction: rec = contraction_trial(config, i, seed); break;
      case LemmaId::kStability: rec = stability_trial(config, i, seed); break;
      case LemmaId::kBinom: break;
    }
    ++summary.checked;
    if (!rec.passed) ++summary.failed;
    sink(rec);
  }
  return summary;
}

}  // namespace extremal
