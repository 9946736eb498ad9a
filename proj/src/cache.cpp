#include "extremal/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <json.hpp>

#include "extremal/errors.hpp"

namespace extremal {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
T field(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'", 0);
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("field '") + name + "' has the wrong type", 0);
  }
}

std::int64_t integer(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'", 0);
  if (!it->is_number_integer())
    throw ParseError(std::string("field '") + name + "' is not an integer", 0);
  return it->get<std::int64_t>();
}

std::uint64_t unsigned_integer(const Json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + name + "'", 0);
  if (!it->is_number_unsigned())
    throw ParseError(std::string("field '") + name + "' is not a nonnegative integer", 0);
  return it->get<std::uint64_t>();
}

}  // namespace

std::string record_to_json_line(const SearchRecord& record) {
  Json j;
  j["params"] = {{"n", record.params.n},
                 {"k", record.params.k},
                 {"s", record.params.s},
                 {"r", record.params.r},
                 {"p", record.params.p}};
  j["value"] = record.value;
  j["witness"] = record.witness;
  j["nodes_explored"] = record.nodes_explored;
  j["maximal_graphs_seen"] = record.maximal_graphs_seen;
  j["wall_time"] = record.wall_time;
  j["theorem_gap"] = record.theorem_gap ? Json(*record.theorem_gap) : Json(nullptr);
  return j.dump();
}

SearchRecord record_from_json_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object", 0);
  auto params = j.find("params");
  if (params == j.end() || !params->is_object()) throw ParseError("missing object 'params'", 0);
  SearchRecord rec;
  rec.params = {integer(*params, "n"), integer(*params, "k"), integer(*params, "s"),
                integer(*params, "r"), integer(*params, "p")};
  rec.value = unsigned_integer(j, "value");
  rec.witness = field<std::string>(j, "witness");
  rec.nodes_explored = unsigned_integer(j, "nodes_explored");
  rec.maximal_graphs_seen = unsigned_integer(j, "maximal_graphs_seen");
  auto wall = j.find("wall_time");
  if (wall == j.end() || !wall->is_number()) throw ParseError("field 'wall_time' is not a number", 0);
  rec.wall_time = wall->get<double>();
  auto gap = j.find("theorem_gap");
  if (gap == j.end()) throw ParseError("missing field 'theorem_gap'", 0);
  if (!gap->is_null()) {
    if (!gap->is_number_integer()) throw ParseError("field 'theorem_gap' is not an integer", 0);
    rec.theorem_gap = gap->get<std::int64_t>();
  }
  return rec;
}

CacheKey cache_key(const SearchParams& params) {
  return {params.n, params.k, params.s, params.r};
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

void ResultCache::load() {
  index_.clear();
  problems_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    const std::string where = path_.string() + ":" + std::to_string(number) + ": ";
    try {
      SearchRecord rec = record_from_json_line(line);
      verify_record(rec);
      index_[cache_key(rec.params)] = std::move(rec);
    } catch (const ParseError& e) {
      problems_.push_back(where + "unreadable record: " + e.what());
    } catch (const IntegrityError& e) {
      problems_.push_back(where + "witness check failed: " + e.what());
    } catch (const Error& e) {
      problems_.push_back(where + "invalid record: " + e.what());
    }
  }
}

std::optional<SearchRecord> ResultCache::lookup(const SearchParams& params) const {
  auto it = index_.find(cache_key(params));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const SearchRecord& record) {
  const std::string line = record_to_json_line(record) + "\n";
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0)
    throw IntegrityError("cannot open cache " + path_.string() + ": " + std::strerror(errno));
  if (::flock(fd, LOCK_EX) != 0) {
    ::close(fd);
    throw IntegrityError("cannot lock cache " + path_.string() + ": " + std::strerror(errno));
  }
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t w = ::write(fd, line.data() + written, line.size() - written);
    if (w < 0) {
      if (errno == EINTR) continue;
      const std::string reason = std::strerror(errno);
      ::flock(fd, LOCK_UN);
      ::close(fd);
      throw IntegrityError("cannot write cache " + path_.string() + ": " + reason);
    }
    written += static_cast<std::size_t>(w);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
  index_[cache_key(record.params)] = record;
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("EXTREMAL_LAB_CACHE"); env && *env) return env;
  return "extremal_lab_cache.jsonl";
}

}  // namespace extremal
