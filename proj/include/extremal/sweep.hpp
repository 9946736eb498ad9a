#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/cache.hpp"
#include "extremal/search.hpp"

namespace extremal {

/// Integer list from "7", "7..9" or comma-separated mixes such as "2,4..5".
/// Throws ParameterError naming `flag` on malformed text.
std::vector<std::int64_t> parse_range(std::string_view text, std::string_view flag);

/// k either as fixed values or as "n+c" / "n-c" relative to each n.
struct KSpec {
  std::vector<std::int64_t> values;
  std::optional<std::int64_t> offset;

  std::vector<std::int64_t> for_order(std::int64_t n) const;
};

KSpec parse_k_spec(std::string_view text);

struct SweepGrid {
  std::vector<std::int64_t> n;
  KSpec k;
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> r;
};

struct SweepRow {
  SearchRecord record;
  bool cached = false;
  std::optional<Count> theorem_value;   ///< when k >= 5, s >= 1 and k <= n
  std::optional<Count> matching_turan;  ///< when k > n and n >= 2s+1
};

/// Wraps a record with the comparison values for its parameters.
SweepRow annotate_record(SearchRecord record, bool cached);

/// Searches every (n, k, s, r) of the grid in n, k, s, r order. Cached
/// records are reused; new ones are appended to the cache when one is given.
/// `progress`, when set, is called after each row.
std::vector<SweepRow> sweep(const SweepGrid& grid, const SearchOptions& options,
                            ResultCache* cache,
                            const std::function<void(const SweepRow&)>& progress = {});

}  // namespace extremal
