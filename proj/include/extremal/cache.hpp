#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "extremal/search.hpp"

namespace extremal {

/// One JSON object per line with the fields params{n,k,s,r,p}, value,
/// witness, nodes_explored, maximal_graphs_seen, wall_time, theorem_gap.
std::string record_to_json_line(const SearchRecord& record);

/// Throws ParseError when the line is not a well-typed record.
SearchRecord record_from_json_line(std::string_view line);

using CacheKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

CacheKey cache_key(const SearchParams& params);

/// Append-only JSON-lines store of search records keyed by (n, k, s, r).
/// Appends take an exclusive flock, so concurrent writers do not interleave.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  /// Reads the file (a missing file is an empty cache). Lines that fail to
  /// parse or whose witness does not re-verify are skipped and described in
  /// problems(). The last valid line for a key wins.
  void load();

  std::optional<SearchRecord> lookup(const SearchParams& params) const;

  /// Appends `record` to the file and the in-memory index.
  void store(const SearchRecord& record);

  const std::vector<std::string>& problems() const noexcept { return problems_; }
  std::size_t size() const noexcept { return index_.size(); }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::map<CacheKey, SearchRecord> index_;
  std::vector<std::string> problems_;
};

/// Path from the EXTREMAL_LAB_CACHE environment variable, or
/// "extremal_lab_cache.jsonl" in the working directory.
std::filesystem::path default_cache_path();

}  // namespace extremal
