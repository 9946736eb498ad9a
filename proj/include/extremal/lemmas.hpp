#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extremal/blocks.hpp"
#include "extremal/checked.hpp"
#include "extremal/graph.hpp"
#include "extremal/invariants.hpp"

namespace extremal {

// ---------------------------------------------------------------------------
// Binomial exchange inequality
// ---------------------------------------------------------------------------

enum class BinomOutcome { kHolds, kHoldsStrictly, kViolated, kPreconditionFailed };

std::string to_string(BinomOutcome outcome);

/// Compares C(x,r)+C(y,r) with C(w,r)+C(z,r) under x+y=w+z, x>=w, x>=z,
/// x>=r, r>=2. kHolds means equality, kHoldsStrictly a strict inequality.
BinomOutcome binom_inequality_check(std::int64_t r, std::int64_t w, std::int64_t x, std::int64_t y,
                                    std::int64_t z);

// ---------------------------------------------------------------------------
// Block-cut trees and matchings
// ---------------------------------------------------------------------------

/// Matching of g covering every vertex except `v`, built by peeling
/// block-leaves and matching along each block's Hamiltonian cycle.
/// Requires a strict tree whose blocks are Hamiltonian of odd order;
/// otherwise throws PreconditionError naming the offending block.
Matching near_perfect_matching_excluding(const Graph& g, const BlockCutTree& tree, Vertex v,
                                         const ExactLimits& limits = {});

/// Block-cut star: vertex 0 of every block is identified into the center
/// (vertex 0 of the result); other vertices follow block by block.
Graph block_cut_star_of(std::span<const Graph> blocks);

/// Blocks of a connected graph as standalone graphs, in decomposition order.
std::vector<Graph> block_graphs(const Graph& g, const BlockCutTree& tree);

// ---------------------------------------------------------------------------
// Longest path / long cycle bounds
// ---------------------------------------------------------------------------

enum class CheckStatus { kPass, kFail, kSkipped };
std::string to_string(CheckStatus status);

struct DiracKopylovReport {
  CheckStatus dirac = CheckStatus::kSkipped;
  CheckStatus kopylov = CheckStatus::kSkipped;
  std::vector<Vertex> path;   ///< the longest path used as witness
  int dirac_bound = 0;        ///< min{n, d(u)+d(v)+1}
  int circumference = -1;     ///< computed for the 2-connected part only
  int kopylov_bound = 0;      ///< min{|E(P)|+1, d_P(u)+d_P(v)}
  std::string note;           ///< skip reasons

  bool passed() const { return dirac != CheckStatus::kFail && kopylov != CheckStatus::kFail; }
  std::string witness() const;
};

DiracKopylovReport dirac_kopylov_check(const Graph& g, const ExactLimits& limits = {});

struct ContractionReport {
  int edges_checked = 0;
  std::optional<Edge> violation;  ///< first edge whose contraction is not free

  bool passed() const { return !violation; }
};

/// Contracts every edge of a {C_{>=k}, M_{s+1}}-free graph and checks the
/// result stays free. Throws PreconditionError if g itself is not free.
ContractionReport contraction_closure_check(const Graph& g, int k, int s,
                                            const ExactLimits& limits = {});

// ---------------------------------------------------------------------------
// Stability partition, potential, exceptional edges
// ---------------------------------------------------------------------------

/// X a (p-1)-clique; Y independent with every neighbourhood exactly X; Z the
/// rest, each of degree >= p with neighbours in X u Z.
struct StabilityPartition {
  VertexSet x = 0;
  VertexSet y = 0;
  VertexSet z = 0;

  int t0() const { return popcount(z); }
  friend bool operator==(const StabilityPartition&, const StabilityPartition&) = default;
};

/// First clause the partition breaks for g, or nullopt if all three hold.
std::optional<std::string> stability_violation(const Graph& g, const StabilityPartition& part, int p);

/// Among valid partitions, one with the largest |Y|, ties broken by the
/// lexicographically least X. nullopt when none exists.
std::optional<StabilityPartition> stability_decompose(const Graph& g, int p);

enum class PhiVariant { kTriple, kQuadruple };

/// (e(G), k3(G), c(Z)+|Y| [, c(Z)]) compared lexicographically.
struct PhiPotential {
  Count e = 0;
  Count k3 = 0;
  Count cz_plus_y = 0;
  std::optional<Count> cz;

  friend auto operator<=>(const PhiPotential&, const PhiPotential&) = default;
};

/// Throws PreconditionError if `part` is not a valid partition of g (p is
/// taken as |X|+1).
PhiPotential phi_potential(const Graph& g, const StabilityPartition& part, PhiVariant variant);

/// Edges inside Z whose ends are both adjacent to all of X.
std::vector<Edge> exceptional_edges(const Graph& g, const StabilityPartition& part);

// ---------------------------------------------------------------------------
// Report lines
// ---------------------------------------------------------------------------

/// One line of a lemma-check report: lemma id, seed, instance graph6,
/// PASS/FAIL, witness; tab separated.
struct LemmaRecord {
  std::string lemma;
  std::uint64_t seed = 0;
  std::string graph6;
  bool passed = false;
  std::string witness;

  std::string to_line() const;
  static LemmaRecord from_line(std::string_view line);
  friend bool operator==(const LemmaRecord&, const LemmaRecord&) = default;
};

}  // namespace extremal
