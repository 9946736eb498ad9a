#include "extremal/sweep.hpp"

#include <charconv>

#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"

namespace extremal {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view flag) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParameterError(std::string(flag) + ": '" + std::string(text) + "' is not an integer");
  return value;
}

}  // namespace

std::vector<std::int64_t> parse_range(std::string_view text, std::string_view flag) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::int64_t lo = parse_int(item.substr(0, dots), flag);
      const std::int64_t hi = parse_int(item.substr(dots + 2), flag);
      if (lo > hi)
        throw ParameterError(std::string(flag) + ": empty range '" + std::string(item) + "'");
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item, flag));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::int64_t> KSpec::for_order(std::int64_t n) const {
  if (offset) return {n + *offset};
  return values;
}

KSpec parse_k_spec(std::string_view text) {
  KSpec spec;
  if (text.size() >= 2 && text[0] == 'n' && (text[1] == '+' || text[1] == '-')) {
    const std::int64_t c = parse_int(text.substr(2), "--k");
    spec.offset = text[1] == '+' ? c : -c;
  } else if (text == "n") {
    spec.offset = 0;
  } else {
    spec.values = parse_range(text, "--k");
  }
  return spec;
}

SweepRow annotate_record(SearchRecord record, bool cached) {
  SweepRow row;
  const SearchParams& p = record.params;
  if (p.k > p.n) {
    if (p.n >= 2 * p.s + 1) row.matching_turan = matching_turan_value(p.n, p.s, p.r);
  } else if (p.k >= 5 && p.s >= 1) {
    row.theorem_value = theorem_value(derive_params(p.n, p.k, p.s, p.r)).value;
  }
  row.record = std::move(record);
  row.cached = cached;
  return row;
}

std::vector<SweepRow> sweep(const SweepGrid& grid, const SearchOptions& options,
                            ResultCache* cache,
                            const std::function<void(const SweepRow&)>& progress) {
  std::vector<SearchParams> points;
  for (std::int64_t n : grid.n)
    for (std::int64_t k : grid.k.for_order(n))
      for (std::int64_t s : grid.s)
        for (std::int64_t r : grid.r) {
          const SearchParams p = make_search_params(n, k, s, r);
          if (p.n > options.max_order || options.max_order > kHardSearchCap)
            throw CapacityError("sweep point n = " + std::to_string(n) + " exceeds the search cap " +
                                std::to_string(options.max_order));
          points.push_back(p);
        }

  std::vector<SweepRow> rows;
  for (const SearchParams& p : points) {
    SweepRow row;
    if (cache) {
      if (auto hit = cache->lookup(p)) {
        row.record = *hit;
        row.cached = true;
      }
    }
    if (!row.cached) {
      row.record = extremal_search(p, options);
      if (cache) cache->store(row.record);
    }
    row = annotate_record(std::move(row.record), row.cached);
    if (progress) progress(row);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace extremal
