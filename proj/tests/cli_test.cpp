#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "extremal/cache.hpp"
#include "extremal/cli.hpp"
#include "extremal/constructions.hpp"
#include "extremal/graph6.hpp"
#include "extremal/lemmas.hpp"

using namespace extremal;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("extremal_lab_cli_" + name);
  std::filesystem::remove(path);
  return path;
}

}  // namespace

TEST_CASE("construct prints graph6 and a summary") {
  auto r = cli({"construct", "--family", "g1", "--n", "10", "--k", "5", "--s", "3"});
  REQUIRE(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(decode_graph6(out[0]) == build_construction(Family::kG1, derive_params(10, 5, 3, 2)));
  CHECK(out[1].find("edges=17") != std::string::npos);
  CHECK(cli({"construct", "--family", "G1", "--n", "10", "--k", "5", "--s", "3"}).out == r.out);
}

TEST_CASE("theorem reports branch and value") {
  auto r = cli({"theorem", "--n", "20", "--k", "9", "--s", "4", "--r", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("branch=p>s") != std::string::npos);
  CHECK(r.out.find("value=70") != std::string::npos);
  auto j = Json::parse(cli({"theorem", "--n", "30", "--k", "6", "--s", "3", "--r", "2", "--format", "json"}).out);
  CHECK(j["branch"] == "even:d=p-2");
  CHECK(j["value"] == 58);
  CHECK(j["families"].size() == 3);
  CHECK(j.dump() + "\n" ==
        cli({"theorem", "--n", "30", "--k", "6", "--s", "3", "--r", "2", "--format", "json"}).out);
}

TEST_CASE("check-lemma contraction") {
  auto r = cli({"check-lemma", "--lemma", "contraction", "--trials", "1000", "--seed", "7"});
  CHECK(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 1001);
  int pass = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const LemmaRecord rec = LemmaRecord::from_line(out[i]);
    pass += rec.passed;
    CHECK(rec.lemma == "contraction");
  }
  CHECK(pass == 1000);
  CHECK(out.back() == "# contraction seed=7 checked=1000 failed=0");
  auto again = cli({"check-lemma", "--lemma", "contraction", "--trials", "1000", "--seed", "7"});
  CHECK(again.out == r.out);
  CHECK(cli({"check-lemma", "--lemma", "contraction", "--trials", "5", "--seed", "8"}).out != "");
}

TEST_CASE("every lemma runs through the CLI") {
  for (const char* lemma : {"dirac-kopylov", "near-perfect", "star", "stability"}) {
    CAPTURE(lemma);
    auto r = cli({"check-lemma", "--lemma", lemma, "--trials", "20", "--seed", "3", "--format", "json"});
    CHECK(r.code == kExitOk);
    auto out = lines(r.out);
    REQUIRE(out.size() == 21);
    for (std::size_t i = 0; i < 20; ++i) {
      auto j = Json::parse(out[i]);
      CHECK(j["passed"] == true);
      CHECK(j.dump() == out[i]);
    }
    auto summary = Json::parse(out.back());
    CHECK(summary["base_seed"] == 3);
    CHECK(summary["failed"] == 0);
  }
  auto binom = cli({"check-lemma", "--lemma", "binom", "--binom-max", "8"});
  CHECK(binom.code == kExitOk);
  CHECK(lines(binom.out).size() == 1);
  CHECK(binom.out.rfind("# binom seed=1 checked=", 0) == 0);
}

TEST_CASE("search output round trips and uses the cache") {
  const auto path = temp_file("search.jsonl");
  ::setenv("EXTREMAL_LAB_CACHE", path.c_str(), 1);
  auto first = cli({"search", "--n", "6", "--k", "5", "--s", "2", "--r", "2", "--format", "json"});
  REQUIRE(first.code == kExitOk);
  const SearchRecord rec = record_from_json_line(lines(first.out).at(0));
  CHECK(rec.value == 9);
  CHECK(record_to_json_line(rec) + "\n" == first.out);
  auto second = cli({"search", "--n", "6", "--k", "5", "--s", "2", "--r", "2", "--format", "json"});
  CHECK(second.out == first.out);  // served from the cache, wall_time included
  auto table = cli({"search", "--n", "6", "--k", "5", "--s", "2", "--r", "2"});
  CHECK(lines(table.out).at(1).find("yes") != std::string::npos);
  ::unsetenv("EXTREMAL_LAB_CACHE");

  auto other = cli({"search", "--n", "6", "--k", "5", "--s", "2", "--r", "2", "--cache",
                    path.string(), "--format", "csv"});
  auto csv = lines(other.out);
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "n,k,s,r,p,value,theorem_value,theorem_gap,matching_turan_value,nodes_explored,"
                  "maximal_graphs_seen,wall_time,cached,witness");
  CHECK(csv[1].rfind("6,5,2,2,3,9,9,0,,", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("fresh searches differ only in timing") {
  auto a = cli({"search", "--n", "7", "--k", "6", "--s", "3", "--r", "3", "--no-cache", "--format", "json"});
  auto b = cli({"search", "--n", "7", "--k", "6", "--s", "3", "--r", "3", "--no-cache", "--format", "json",
                "--jobs", "3"});
  auto ja = Json::parse(a.out), jb = Json::parse(b.out);
  ja.erase("wall_time");
  jb.erase("wall_time");
  CHECK(ja == jb);
  CHECK(ja["value"] == 11);
}

TEST_CASE("sweep rows") {
  auto r = cli({"sweep", "--n", "7..8", "--k", "n+1", "--s", "2", "--r", "2..3", "--no-cache", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 4);
  for (const auto& line : out) {
    auto j = Json::parse(line);
    CHECK(j.dump() == line);
    CHECK(j["record"]["value"] == j["matching_turan_value"]);
    CHECK(j["theorem_value"].is_null());
    CHECK(record_from_json_line(j["record"].dump()).params.k == j["record"]["params"]["n"].get<int>() + 1);
  }
  auto table = cli({"sweep", "--n", "6", "--k", "5..6", "--s", "3", "--r", "2", "--no-cache"});
  CHECK(lines(table.out).size() == 3);
}

TEST_CASE("invariants of graph6 input") {
  auto r = cli({"invariants"}, "Dhc\nD~{\n");
  REQUIRE(r.code == kExitOk);
  auto out = lines(r.out);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == "Dhc order=5 edges=5 K2=5 K3=0 K4=0 nu=2 circumference=5 blocks=1");
  CHECK(out[1] == "D~{ order=5 edges=10 K2=10 K3=10 K4=5 nu=2 circumference=5 blocks=1");

  const auto path = temp_file("graphs.g6");
  std::ofstream(path) << encode_graph6(path_graph(4)) << "\n";
  auto j = cli({"invariants", "--input", path.string(), "--r", "2", "--k", "4", "--s", "1", "--format", "json"});
  REQUIRE(j.code == kExitOk);
  auto parsed = Json::parse(j.out);
  CHECK(parsed["blocks"] == 3);
  CHECK(parsed["free"] == false);
  CHECK(parsed.dump() + "\n" == j.out);
  auto csv = cli({"invariants", "--input", path.string(), "--r", "2..3", "--format", "csv"});
  CHECK(lines(csv.out).at(0) == "graph6,order,edges,K2,K3,nu,circumference,blocks");
  std::filesystem::remove(path);
}

TEST_CASE("validation failures exit with status 2") {
  auto unknown = cli({"search", "--n", "6", "--k", "5", "--s", "2", "--r", "2", "--frobnicate"});
  CHECK(unknown.code == kExitValidation);
  CHECK(unknown.err.find("--frobnicate") != std::string::npos);
  auto range = cli({"search", "--n", "13", "--k", "5", "--s", "2", "--r", "2"});
  CHECK(range.code == kExitValidation);
  CHECK(range.err.find("--n") != std::string::npos);
  auto family = cli({"construct", "--family", "g9", "--n", "10", "--k", "5", "--s", "3"});
  CHECK(family.code == kExitValidation);
  CHECK(family.err.find("--family") != std::string::npos);
  CHECK(cli({"construct", "--family", "g1", "--n", "4", "--k", "5", "--s", "3"}).code == kExitValidation);
  CHECK(cli({"invariants"}, "D~\n").code == kExitValidation);
  CHECK(cli({"search", "--n", "11", "--k", "5", "--s", "2", "--r", "2", "--no-cache"}).code ==
        kExitValidation);
  auto sweep = cli({"sweep", "--n", "9..7", "--k", "5", "--s", "2", "--r", "2", "--no-cache"});
  CHECK(sweep.code == kExitValidation);
  CHECK(sweep.err.find("--n") != std::string::npos);
  CHECK(cli({}).code == kExitValidation);
  CHECK(cli({"check-lemma", "--lemma", "nope"}).code == kExitValidation);
}

TEST_CASE("internal failures exit with status 3") {
  const auto dir = std::filesystem::temp_directory_path();
  auto r = cli({"search", "--n", "5", "--k", "5", "--s", "2", "--r", "2", "--cache", dir.string()});
  CHECK(r.code == kExitInternal);
  CHECK(r.err.find("cannot open cache") != std::string::npos);
}

TEST_CASE("help documents CSV columns") {
  auto r = cli({"search", "--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("CSV columns: n,k,s,r,p,value") != std::string::npos);
}
