#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "extremal/cache.hpp"
#include "extremal/canonical.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"
#include "extremal/search.hpp"
#include "extremal/sweep.hpp"

using namespace extremal;

namespace {

SearchRecord run(int n, int k, int s, int r, SearchOptions o = {}) {
  return extremal_search(make_search_params(n, k, s, r), o);
}

std::filesystem::path temp_file(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("extremal_lab_" + name);
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("search examples") {
  auto a = run(5, 6, 2, 2);
  CHECK(a.value == 10);
  CHECK(decode_graph6(a.witness) == clique(5));

  auto b = run(3, 3, 1, 2);
  CHECK(b.value == 2);
  CHECK(decode_graph6(b.witness).edge_count() == 2);

  auto c = run(6, 5, 2, 2);
  CHECK(c.value == 9);
  CHECK(canonical_code(decode_graph6(c.witness)) == canonical_code(join(clique(2), independent(4))));
  for (const auto& rec : {a, b, c}) CHECK_NOTHROW(verify_record(rec));
}

TEST_CASE("search agrees with the brute-force oracle") {
  // networkx enumeration over all labelled graphs (tests/oracle/oracle.py)
  struct Row { int n, k, s, r; Count value; };
  const Row rows[] = {{6, 5, 3, 2, 9},  {6, 5, 3, 3, 5},  {6, 6, 3, 2, 11}, {6, 6, 3, 3, 10},
                      {7, 5, 3, 2, 12}, {7, 5, 3, 3, 8},  {7, 6, 3, 2, 13}, {7, 6, 3, 3, 11}};
  for (const Row& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.k);
    CAPTURE(row.r);
    for (bool bound : {false, true}) {
      SearchOptions o;
      o.construction_bound = bound;
      CHECK(run(row.n, row.k, row.s, row.r, o).value == row.value);
    }
  }
}

TEST_CASE("cycle-unconstrained search equals the matching value") {
  for (int n = 3; n <= 8; ++n)
    for (int s = 1; 2 * s + 1 <= n; ++s)
      for (int r = 2; r <= 4; ++r) {
        CAPTURE(n);
        CAPTURE(s);
        CAPTURE(r);
        auto rec = run(n, n + 1, s, r);
        CHECK(rec.value == matching_turan_value(n, s, r));
        CHECK(rec.theorem_gap == std::int64_t{0});
      }
}

TEST_CASE("dedup and job count do not change the result") {
  for (auto [n, k, s, r] : {std::array{7, 8, 3, 2}, std::array{8, 6, 3, 3}, std::array{8, 5, 2, 2}}) {
    SearchOptions off, on;
    off.canonical_dedup = false;
    on.canonical_dedup = true;
    auto base_off = run(n, k, s, r, off);
    auto base_on = run(n, k, s, r, on);
    CHECK(base_off.value == base_on.value);
    CHECK(base_on.nodes_explored <= base_off.nodes_explored);
    for (int jobs : {2, 4}) {
      off.jobs = on.jobs = jobs;
      auto par_off = run(n, k, s, r, off);
      auto par_on = run(n, k, s, r, on);
      CHECK(par_off.nodes_explored == base_off.nodes_explored);
      CHECK(par_off.witness == base_off.witness);
      CHECK(par_off.maximal_graphs_seen == base_off.maximal_graphs_seen);
      CHECK(par_on.nodes_explored == base_on.nodes_explored);
      CHECK(par_on.witness == base_on.witness);
    }
  }
}

TEST_CASE("search is at least every free construction") {
  for (int n = 6; n <= 8; ++n)
    for (int k : {5, 6, 7})
      for (int r : {2, 3}) {
        const FamilyParams fp = derive_params(n, k, 3, r);
        auto rec = run(n, k, 3, r);
        for (Family f : kAllFamilies)
          if (!inapplicable_reason(f, fp)) CHECK(rec.value >= formula_clique_count(f, fp));
        if (auto t = theorem_value(fp).value) CHECK(rec.value >= *t);
      }
}

TEST_CASE("search parameter and capacity errors") {
  CHECK_THROWS_AS(run(11, 5, 2, 2), CapacityError);
  SearchOptions big;
  big.max_order = 13;
  CHECK_THROWS_AS(run(5, 5, 2, 2, big), CapacityError);
  CHECK_THROWS_AS(make_search_params(5, 2, 1, 2), ParameterError);
  CHECK_THROWS_AS(make_search_params(5, 5, -1, 2), ParameterError);
  CHECK_THROWS_AS(make_search_params(5, 5, 1, 1), ParameterError);
  CHECK_THROWS_AS(make_search_params(0, 5, 1, 2), ParameterError);
  CHECK(make_search_params(9, 6, 3, 2).p == 3);
}

TEST_CASE("degenerate searches") {
  CHECK(run(1, 3, 0, 2).value == 0);
  CHECK(run(4, 3, 0, 2).value == 0);
  CHECK(run(4, 5, 2, 5).value == 0);
  CHECK(run(4, 3, 2, 2).value == 3);  // a spanning tree such as P4
}

TEST_CASE("verify_record rejects inconsistent records") {
  auto rec = run(6, 5, 2, 2);
  auto bad = rec;
  bad.value = 10;
  CHECK_THROWS_AS(verify_record(bad), IntegrityError);
  bad = rec;
  bad.witness = encode_graph6(clique(6));
  CHECK_THROWS_AS(verify_record(bad), IntegrityError);
  bad = rec;
  bad.witness = "E}";
  CHECK_THROWS_AS(verify_record(bad), IntegrityError);
  bad = rec;
  bad.params.p = 4;
  CHECK_THROWS_AS(verify_record(bad), IntegrityError);
}

TEST_CASE("records round trip through JSON lines") {
  auto rec = run(6, 5, 2, 3);
  CHECK(record_from_json_line(record_to_json_line(rec)) == rec);
  auto no_gap = run(4, 3, 1, 2);
  CHECK_FALSE(no_gap.theorem_gap);
  CHECK(record_from_json_line(record_to_json_line(no_gap)) == no_gap);
  const std::string line = record_to_json_line(no_gap);
  CHECK(line.find("\"theorem_gap\":null") != std::string::npos);
  CHECK(line.rfind("{\"params\":{\"n\":4,\"k\":3,\"s\":1,\"r\":2,\"p\":2},\"value\":", 0) == 0);
  CHECK_THROWS_AS(record_from_json_line("{"), ParseError);
  CHECK_THROWS_AS(record_from_json_line("[1,2]"), ParseError);
  CHECK_THROWS_AS(record_from_json_line(R"({"params":{"n":4}})"), ParseError);
}

TEST_CASE("result cache stores, reloads and reports corrupt lines") {
  const auto path = temp_file("cache_test.jsonl");
  ResultCache cache(path);
  cache.load();
  CHECK(cache.size() == 0);
  CHECK(cache.problems().empty());
  auto rec = run(6, 5, 2, 2);
  cache.store(rec);
  {
    std::ofstream out(path, std::ios::app);
    out << "not json\n";
    auto forged = rec;
    forged.params = make_search_params(6, 6, 2, 2);
    forged.value = 99;
    out << record_to_json_line(forged) << "\n";
  }
  ResultCache reloaded(path);
  reloaded.load();
  CHECK(reloaded.size() == 1);
  REQUIRE(reloaded.problems().size() == 2);
  CHECK(reloaded.problems()[0].find(":2: unreadable record") != std::string::npos);
  CHECK(reloaded.problems()[1].find(":3: witness check failed") != std::string::npos);
  CHECK(reloaded.lookup(rec.params) == rec);
  CHECK_FALSE(reloaded.lookup(make_search_params(6, 6, 2, 2)));
  std::filesystem::remove(path);
}

TEST_CASE("cache path honours the environment") {
  ::setenv("EXTREMAL_LAB_CACHE", "/tmp/somewhere.jsonl", 1);
  CHECK(default_cache_path() == "/tmp/somewhere.jsonl");
  ::unsetenv("EXTREMAL_LAB_CACHE");
  CHECK(default_cache_path() == "extremal_lab_cache.jsonl");
}

TEST_CASE("range parsing") {
  CHECK(parse_range("7..9", "--n") == std::vector<std::int64_t>{7, 8, 9});
  CHECK(parse_range("2,4..5", "--s") == std::vector<std::int64_t>{2, 4, 5});
  CHECK(parse_range("3", "--r") == std::vector<std::int64_t>{3});
  CHECK_THROWS_WITH_AS(parse_range("9..7", "--n"), doctest::Contains("--n"), ParameterError);
  CHECK_THROWS_WITH_AS(parse_range("x", "--s"), doctest::Contains("--s"), ParameterError);
  CHECK(parse_k_spec("n+1").for_order(7) == std::vector<std::int64_t>{8});
  CHECK(parse_k_spec("n-2").for_order(7) == std::vector<std::int64_t>{5});
  CHECK(parse_k_spec("5..6").for_order(7) == std::vector<std::int64_t>{5, 6});
}

TEST_CASE("sweep reuses the cache") {
  const auto path = temp_file("sweep_test.jsonl");
  SweepGrid grid{parse_range("7..9", "--n"), parse_k_spec("n+1"), {2}, {2}};
  ResultCache cache(path);
  cache.load();
  auto first = sweep(grid, {}, &cache);
  REQUIRE(first.size() == 3);
  for (const auto& row : first) {
    CHECK_FALSE(row.cached);
    REQUIRE(row.matching_turan);
    CHECK(row.record.value == *row.matching_turan);
    CHECK_FALSE(row.theorem_value);
  }
  ResultCache again(path);
  again.load();
  auto second = sweep(grid, {}, &again);
  REQUIRE(second.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(second[i].cached);
    CHECK(second[i].record == first[i].record);
  }
  std::filesystem::remove(path);

  SweepGrid theorem{{6}, parse_k_spec("5"), {3}, {2}};
  auto rows = sweep(theorem, {}, nullptr);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].theorem_value);
  CHECK(rows[0].record.theorem_gap ==
        static_cast<std::int64_t>(rows[0].record.value) - static_cast<std::int64_t>(*rows[0].theorem_value));
  SweepGrid too_big{{11}, parse_k_spec("5"), {2}, {2}};
  CHECK_THROWS_AS(sweep(too_big, {}, nullptr), CapacityError);
}
