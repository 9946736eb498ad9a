#include "extremal/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "extremal/blocks.hpp"
#include "extremal/cache.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"
#include "extremal/invariants.hpp"
#include "extremal/lemma_runs.hpp"
#include "extremal/search.hpp"
#include "extremal/sweep.hpp"

namespace extremal {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kTable };

const std::map<std::string, Format> kFormats{
    {"json", Format::kJson}, {"csv", Format::kCsv}, {"table", Format::kTable}};

constexpr const char* kConstructColumns = "id,family,n,k,s,p,order,edges,graph6";
constexpr const char* kTheoremColumns = "n,k,s,r,p,branch,family,applicable,value,note";
constexpr const char* kSearchColumns =
    "n,k,s,r,p,value,theorem_value,theorem_gap,matching_turan_value,nodes_explored,"
    "maximal_graphs_seen,wall_time,cached,witness";
constexpr const char* kLemmaColumns = "lemma,seed,graph6,result,witness";

std::string csv_footer(const std::string& columns) { return "CSV columns: " + columns; }

Json optional_json(const std::optional<Count>& v) { return v ? Json(*v) : Json(nullptr); }

template <typename T>
std::string optional_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string fixed_seconds(double seconds) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << seconds;
  return os.str();
}

struct Request {
  Format format = Format::kTable;
  std::int64_t n = 0, k = 0, s = 0, r = 2;
  std::string family;
  std::string input;
  std::string r_range = "2..4";
  std::optional<int> k_opt, s_opt;
  // search and sweep
  int jobs = 1;
  std::string dedup = "auto";
  std::string cache;
  bool no_cache = false;
  int max_order = kDefaultSearchCap;
  std::string n_range, k_spec, s_range, r_grid;
  // check-lemma
  std::string lemma;
  int trials = 100;
  std::uint64_t seed = 1;
  int lemma_max_order = 12;
  int binom_max = 30;
};

void add_format(CLI::App* sub, Request& req) {
  sub->add_option("--format", req.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("table");
}

void add_search_options(CLI::App* sub, Request& req) {
  sub->add_option("--jobs", req.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::Range(0, 256))
      ->default_val(1);
  sub->add_option("--dedup", req.dedup, "Isomorph rejection: auto (n >= 8), on or off")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->default_val("auto");
  sub->add_option("--cache", req.cache,
                  "Result cache (default: $EXTREMAL_LAB_CACHE or extremal_lab_cache.jsonl)");
  sub->add_flag("--no-cache", req.no_cache, "Neither read nor write the result cache");
  sub->add_option("--max-order", req.max_order, "Largest n accepted")
      ->check(CLI::Range(1, kHardSearchCap))
      ->default_val(kDefaultSearchCap);
}

SearchOptions search_options(const Request& req) {
  SearchOptions o;
  o.jobs = req.jobs;
  if (req.dedup != "auto") o.canonical_dedup = req.dedup == "on";
  o.max_order = req.max_order;
  return o;
}

std::unique_ptr<ResultCache> open_cache(const Request& req, std::ostream& err) {
  if (req.no_cache) return nullptr;
  auto cache = std::make_unique<ResultCache>(req.cache.empty() ? default_cache_path()
                                                               : std::filesystem::path(req.cache));
  cache->load();
  for (const std::string& problem : cache->problems()) err << "warning: " << problem << "\n";
  return cache;
}

// ---------------------------------------------------------------------------

int do_construct(const Request& req, std::ostream& out) {
  const auto family = parse_family(req.family);
  if (!family) throw ParameterError("--family: unknown family '" + req.family + "'");
  const FamilyParams params = derive_params(req.n, req.k, req.s, req.r);
  const Term term = construction_term(*family, params);
  const Graph g = realize(term);
  const std::string id = construction_id(*family, params);
  const std::string g6 = encode_graph6(g);
  switch (req.format) {
    case Format::kJson: {
      Json j{{"id", id},          {"family", family_name(*family)}, {"n", params.n},
             {"k", params.k},     {"s", params.s},                  {"p", params.p},
             {"term", term.to_string()}, {"order", g.order()},      {"edges", g.edge_count()},
             {"graph6", g6}};
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << kConstructColumns << "\n"
          << id << "," << family_name(*family) << "," << params.n << "," << params.k << ","
          << params.s << "," << params.p << "," << g.order() << "," << g.edge_count() << ","
          << g6 << "\n";
      break;
    case Format::kTable:
      out << g6 << "\n"
          << id << " order=" << g.order() << " edges=" << g.edge_count()
          << " term=" << term.to_string() << "\n";
      break;
  }
  return kExitOk;
}

std::string read_input(const Request& req, std::istream& in) {
  std::ostringstream buffer;
  if (req.input.empty() || req.input == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(req.input);
    if (!file) throw ParameterError("--input: cannot open '" + req.input + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

int do_invariants(const Request& req, std::istream& in, std::ostream& out) {
  const std::vector<std::int64_t> rs = parse_range(req.r_range, "--r");
  for (std::int64_t r : rs)
    if (r < 1 || r > kMaxVertices) throw ParameterError("--r: clique size " + std::to_string(r) + " out of range [1, 64]");
  if (req.k_opt.has_value() != req.s_opt.has_value())
    throw ParameterError("--k and --s must be given together");
  const std::vector<Graph> graphs = decode_graph6_stream(read_input(req, in));
  if (req.format == Format::kCsv) {
    out << "graph6,order,edges";
    for (std::int64_t r : rs) out << ",K" << r;
    out << ",nu,circumference,blocks";
    if (req.k_opt) out << ",free";
    out << "\n";
  }
  for (const Graph& g : graphs) {
    const std::string g6 = encode_graph6(g);
    std::vector<Count> counts;
    for (std::int64_t r : rs) counts.push_back(count_cliques(g, static_cast<int>(r)));
    const int nu = matching_number(g);
    const int circ = circumference(g);
    const int blocks = block_count(g);
    std::optional<bool> free;
    if (req.k_opt) free = is_free(g, *req.k_opt, *req.s_opt);
    switch (req.format) {
      case Format::kJson: {
        Json cliques = Json::object();
        for (std::size_t i = 0; i < rs.size(); ++i) cliques[std::to_string(rs[i])] = counts[i];
        Json j{{"graph6", g6},  {"order", g.order()},      {"edges", g.edge_count()},
               {"cliques", cliques}, {"nu", nu}, {"circumference", circ}, {"blocks", blocks}};
        if (free) j["free"] = *free;
        out << j.dump() << "\n";
        break;
      }
      case Format::kCsv:
        out << g6 << "," << g.order() << "," << g.edge_count();
        for (Count c : counts) out << "," << c;
        out << "," << nu << "," << circ << "," << blocks;
        if (free) out << "," << (*free ? "true" : "false");
        out << "\n";
        break;
      case Format::kTable:
        out << g6 << " order=" << g.order() << " edges=" << g.edge_count();
        for (std::size_t i = 0; i < rs.size(); ++i) out << " K" << rs[i] << "=" << counts[i];
        out << " nu=" << nu << " circumference=" << circ << " blocks=" << blocks;
        if (free) out << " free=" << (*free ? "yes" : "no");
        out << "\n";
        break;
    }
  }
  return kExitOk;
}

int do_theorem(const Request& req, std::ostream& out) {
  const FamilyParams params = derive_params(req.n, req.k, req.s, req.r);
  const TheoremReport report = theorem_value(params);
  switch (req.format) {
    case Format::kJson: {
      Json families = Json::array();
      for (const FamilyEvaluation& f : report.families)
        families.push_back({{"family", family_name(f.family)},
                            {"applicable", f.applicable},
                            {"value", optional_json(f.value)},
                            {"note", f.note}});
      Json j{{"params", {{"n", params.n}, {"k", params.k}, {"s", params.s}, {"r", params.r}, {"p", params.p}}},
             {"branch", report.branch},
             {"families", families},
             {"value", optional_json(report.value)},
             {"below_threshold", report.below_threshold}};
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv: {
      out << kTheoremColumns << "\n";
      auto prefix = [&] {
        out << params.n << "," << params.k << "," << params.s << "," << params.r << "," << params.p
            << "," << report.branch << ",";
      };
      for (const FamilyEvaluation& f : report.families) {
        prefix();
        out << family_name(f.family) << "," << (f.applicable ? "true" : "false") << ","
            << optional_text(f.value) << "," << f.note << "\n";
      }
      prefix();
      out << "max,," << optional_text(report.value) << ","
          << (report.below_threshold ? "below construction threshold" : "") << "\n";
      break;
    }
    case Format::kTable:
      out << "branch=" << report.branch << "\n";
      for (const FamilyEvaluation& f : report.families) {
        out << family_name(f.family) << " ";
        if (f.applicable)
          out << "value=" << *f.value << "\n";
        else
          out << "inapplicable: " << f.note << "\n";
      }
      out << "value=" << (report.value ? std::to_string(*report.value) : "none");
      if (report.below_threshold) out << " (below construction threshold)";
      out << "\n";
      break;
  }
  return kExitOk;
}

Json row_json(const SweepRow& row) {
  return {{"record", Json::parse(record_to_json_line(row.record))},
          {"cached", row.cached},
          {"theorem_value", optional_json(row.theorem_value)},
          {"matching_turan_value", optional_json(row.matching_turan)}};
}

void write_row(const SweepRow& row, Format format, std::ostream& out) {
  const SearchRecord& rec = row.record;
  const SearchParams& p = rec.params;
  switch (format) {
    case Format::kJson:
      out << row_json(row).dump() << "\n";
      break;
    case Format::kCsv:
      out << p.n << "," << p.k << "," << p.s << "," << p.r << "," << p.p << "," << rec.value << ","
          << optional_text(row.theorem_value) << "," << optional_text(rec.theorem_gap) << ","
          << optional_text(row.matching_turan) << "," << rec.nodes_explored << ","
          << rec.maximal_graphs_seen << "," << fixed_seconds(rec.wall_time) << ","
          << (row.cached ? "true" : "false") << "," << rec.witness << "\n";
      break;
    case Format::kTable:
      out << std::left << std::setw(4) << p.n << std::setw(4) << p.k << std::setw(4) << p.s
          << std::setw(4) << p.r << std::setw(8) << rec.value << std::setw(9)
          << (row.theorem_value ? std::to_string(*row.theorem_value) : "-") << std::setw(6)
          << (rec.theorem_gap ? std::to_string(*rec.theorem_gap) : "-") << std::setw(9)
          << (row.matching_turan ? std::to_string(*row.matching_turan) : "-") << std::setw(12)
          << rec.nodes_explored << std::setw(10) << fixed_seconds(rec.wall_time).substr(0, 8)
          << std::setw(7) << (row.cached ? "yes" : "no") << rec.witness << "\n";
      break;
  }
}

void write_header(Format format, std::ostream& out) {
  if (format == Format::kCsv) out << kSearchColumns << "\n";
  if (format == Format::kTable)
    out << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(4) << "s"
        << std::setw(4) << "r" << std::setw(8) << "value" << std::setw(9) << "theorem" << std::setw(6)
        << "gap" << std::setw(9) << "matching" << std::setw(12) << "nodes" << std::setw(10) << "seconds"
        << std::setw(7) << "cached" << "witness\n";
}

int do_search(const Request& req, std::ostream& out, std::ostream& err) {
  const SearchParams params = make_search_params(req.n, req.k, req.s, req.r);
  auto cache = open_cache(req, err);
  std::optional<SearchRecord> hit;
  if (cache) hit = cache->lookup(params);
  SearchRecord rec = hit ? *hit : extremal_search(params, search_options(req));
  if (cache && !hit) cache->store(rec);
  if (req.format == Format::kJson) {
    out << record_to_json_line(rec) << "\n";
    return kExitOk;
  }
  write_header(req.format, out);
  write_row(annotate_record(std::move(rec), hit.has_value()), req.format, out);
  return kExitOk;
}

int do_sweep(const Request& req, std::ostream& out, std::ostream& err) {
  SweepGrid grid{parse_range(req.n_range, "--n"), parse_k_spec(req.k_spec),
                 parse_range(req.s_range, "--s"), parse_range(req.r_grid, "--r")};
  auto cache = open_cache(req, err);
  write_header(req.format, out);
  sweep(grid, search_options(req), cache.get(),
        [&](const SweepRow& row) { write_row(row, req.format, out); });
  return kExitOk;
}

int do_check_lemma(const Request& req, std::ostream& out) {
  const auto id = parse_lemma(req.lemma);
  if (!id) throw ParameterError("--lemma: unknown lemma '" + req.lemma + "'");
  TrialConfig config;
  config.seed = req.seed;
  config.trials = req.trials;
  config.k = req.k_opt;
  config.s = req.s_opt;
  config.max_order = req.lemma_max_order;
  config.binom_max = req.binom_max;
  if (req.format == Format::kCsv) out << kLemmaColumns << "\n";
  const TrialSummary summary = run_lemma_trials(*id, config, [&](const LemmaRecord& rec) {
    switch (req.format) {
      case Format::kJson:
        out << Json{{"lemma", rec.lemma},   {"seed", rec.seed},       {"graph6", rec.graph6},
                    {"passed", rec.passed}, {"witness", rec.witness}}
                   .dump()
            << "\n";
        break;
      case Format::kCsv:
        out << rec.lemma << "," << rec.seed << "," << rec.graph6 << ","
            << (rec.passed ? "PASS" : "FAIL") << ",\"" << rec.witness << "\"\n";
        break;
      case Format::kTable:
        out << rec.to_line() << "\n";
        break;
    }
  });
  const std::string name = lemma_name(*id);
  if (req.format == Format::kJson) {
    out << Json{{"summary", name},           {"base_seed", req.seed},
                {"checked", summary.checked}, {"failed", summary.failed}}
               .dump()
        << "\n";
  } else if (req.format == Format::kTable) {
    out << "# " << name << " seed=" << req.seed << " checked=" << summary.checked
        << " failed=" << summary.failed << "\n";
  }
  return summary.failed == 0 ? kExitOk : kExitLemmaFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Generalized Turan numbers of long-cycle and matching free graphs", "extremal_lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "extremal_lab 1.0.0");
  Request req;

  auto* construct = app.add_subcommand("construct", "Build a named construction (graph6 + summary)");
  construct->footer(csv_footer(kConstructColumns));
  construct->add_option("--family", req.family, "g1..g6 or star")
      ->required()
      ->check(CLI::IsMember({"g1", "g2", "g3", "g4", "g5", "g6", "star"}, CLI::ignore_case));
  construct->add_option("--n", req.n, "Order")->required()->check(CLI::Range(1, kMaxVertices));
  construct->add_option("--k", req.k, "Forbidden cycle length bound")->required()->check(CLI::Range(5, 1000));
  construct->add_option("--s", req.s, "Matching bound")->required()->check(CLI::Range(1, 1000));
  add_format(construct, req);

  auto* invariants = app.add_subcommand("invariants", "Invariants of graph6 input (one graph per line)");
  invariants->footer(
      "CSV columns: graph6,order,edges,K<r> for each requested r,nu,circumference,blocks[,free]");
  invariants->add_option("--input", req.input, "graph6 file (default: stdin)");
  invariants->add_option("--r", req.r_range, "Clique sizes, e.g. 3 or 2..5")->default_val("2..4");
  invariants->add_option("--k", req.k_opt, "With --s, also report freeness")->check(CLI::Range(3, 1000));
  invariants->add_option("--s", req.s_opt, "With --k, also report freeness")->check(CLI::Range(0, 1000));
  add_format(invariants, req);

  auto* theorem = app.add_subcommand("theorem", "Evaluate the theorem value and its branch");
  theorem->footer(csv_footer(kTheoremColumns));
  theorem->add_option("--n", req.n, "Order")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  theorem->add_option("--k", req.k, "Forbidden cycle length bound")->required()->check(CLI::Range(5, 1000000));
  theorem->add_option("--s", req.s, "Matching bound")->required()->check(CLI::Range(1, 1000000));
  theorem->add_option("--r", req.r, "Clique size")->required()->check(CLI::Range(2, 1000000));
  add_format(theorem, req);

  auto* search = app.add_subcommand("search", "Exact extremal number by exhaustive search");
  search->footer(csv_footer(kSearchColumns));
  search->add_option("--n", req.n, "Order")->required()->check(CLI::Range(1, kHardSearchCap));
  search->add_option("--k", req.k, "Forbidden cycle length bound")->required()->check(CLI::Range(3, 1000));
  search->add_option("--s", req.s, "Matching bound")->required()->check(CLI::Range(0, 1000));
  search->add_option("--r", req.r, "Clique size")->required()->check(CLI::Range(2, 1000));
  add_search_options(search, req);
  add_format(search, req);

  auto* sweep_cmd = app.add_subcommand("sweep", "Search every point of a parameter grid");
  sweep_cmd->footer(csv_footer(kSearchColumns));
  sweep_cmd->add_option("--n", req.n_range, "Orders, e.g. 7..9")->required();
  sweep_cmd->add_option("--k", req.k_spec, "Cycle bounds, e.g. 5..6 or n+1")->required();
  sweep_cmd->add_option("--s", req.s_range, "Matching bounds, e.g. 2,3")->required();
  sweep_cmd->add_option("--r", req.r_grid, "Clique sizes, e.g. 2..3")->required();
  add_search_options(sweep_cmd, req);
  add_format(sweep_cmd, req);

  auto* lemma = app.add_subcommand("check-lemma", "Run seeded lemma checks");
  lemma->footer(csv_footer(kLemmaColumns) +
                "\nTable output: tab-separated lemma, seed, graph6, PASS/FAIL, witness; "
                "then a '#' summary line.");
  lemma->add_option("--lemma", req.lemma, "Lemma to check")
      ->required()
      ->check(CLI::IsMember({"dirac-kopylov", "binom", "near-perfect", "star", "contraction", "stability"}));
  lemma->add_option("--trials", req.trials, "Number of random instances")
      ->check(CLI::Range(0, 10000000))
      ->default_val(100);
  lemma->add_option("--seed", req.seed, "Base seed (instance i uses a seed derived from it)")
      ->default_val(1);
  lemma->add_option("--k", req.k_opt, "Fixed cycle bound for free-graph instances")->check(CLI::Range(3, 64));
  lemma->add_option("--s", req.s_opt, "Fixed matching bound for free-graph instances")->check(CLI::Range(0, 32));
  lemma->add_option("--max-order", req.lemma_max_order, "Largest random instance order")
      ->check(CLI::Range(3, 24))
      ->default_val(12);
  lemma->add_option("--binom-max", req.binom_max, "Upper end of the binom enumeration range")
      ->check(CLI::Range(0, 60))
      ->default_val(30);
  add_format(lemma, req);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (construct->parsed()) return do_construct(req, out);
    if (invariants->parsed()) return do_invariants(req, in, out);
    if (theorem->parsed()) return do_theorem(req, out);
    if (search->parsed()) return do_search(req, out, err);
    if (sweep_cmd->parsed()) return do_sweep(req, out, err);
    if (lemma->parsed()) return do_check_lemma(req, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "internal error: no subcommand ran\n";
  return kExitInternal;
}

}  // namespace extremal
