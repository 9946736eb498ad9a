#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extremal/checked.hpp"
#include "extremal/graph.hpp"

namespace extremal {

inline constexpr int kDefaultSearchCap = 10;
inline constexpr int kHardSearchCap = 12;

/// (n, k, s, r) plus the derived p = floor((k-1)/2) + 1. Unlike FamilyParams
/// this accepts any k >= 3 and s >= 0.
struct SearchParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t s = 0;
  std::int64_t r = 0;
  std::int64_t p = 0;

  friend bool operator==(const SearchParams&, const SearchParams&) = default;
};

/// Throws ParameterError for n < 1, k < 3, s < 0 or r < 2.
SearchParams make_search_params(std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r);

struct SearchOptions {
  /// Isomorph rejection; nullopt means on for n >= 8.
  std::optional<bool> canonical_dedup;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  int jobs = 1;
  /// Edge decisions made sequentially before the tree is split into subtasks.
  int split_depth = 12;
  /// Isomorph rejection is applied only at nodes with at most this many
  /// decided edges; negative means no limit.
  int dedup_depth = -1;
  /// Largest n accepted. Values above kHardSearchCap are rejected.
  int max_order = kDefaultSearchCap;
  /// Prune subtrees that cannot reach the best free construction. The
  /// construction graphs are verified free before their counts are used.
  bool construction_bound = true;
};

struct SearchRecord {
  SearchParams params;
  Count value = 0;
  std::string witness;  ///< graph6
  std::uint64_t nodes_explored = 0;
  std::uint64_t maximal_graphs_seen = 0;
  double wall_time = 0.0;  ///< seconds
  std::optional<std::int64_t> theorem_gap;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

/// The value the theorems predict: matching_turan_value when k > n and
/// n >= 2s+1, theorem_value when k >= 5 and s >= 1, nullopt otherwise.
std::optional<Count> reference_value(const SearchParams& params);

/// Exact ex(n, K_r, {C_{>=k}, M_{s+1}}) by DFS over edge decisions.
/// Throws CapacityError when n exceeds the cap.
SearchRecord extremal_search(const SearchParams& params, const SearchOptions& options = {});

/// Re-checks a record: the witness decodes to an n-vertex free graph with
/// `value` copies of K_r. Throws IntegrityError describing the mismatch.
void verify_record(const SearchRecord& record);

/// Largest count among the verified-free constructions (the named families,
/// K_{2s+1} u I and K_s v I), or 0 when none is free.
Count construction_lower_bound(const SearchParams& params);

}  // namespace extremal
