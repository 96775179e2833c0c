#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrig/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <unistd.h>

using namespace flagrig;

namespace {

FlagType desk() { return FlagType{5, 5, {5, 4, 2}, {5, 4, 2}}; }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("flagrig-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

// Collect every number-like leaf of a JSON tree as (path, string) pairs.
void flatten(const Json& j, const std::string& prefix,
             std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_number_integer()) {
    out[prefix] = std::to_string(j.get<long long>());
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  }
}

}  // namespace

TEST_CASE("json round-trips through parse") {
  FlagType ft = desk();
  RigidityVerdict rv = rigidity_report(ft);
  Json env = envelope(ft, "rigidity", json_of(rv), rv.assumption_log);
  std::string text = render(env, OutputFormat::Json);
  Json back = Json::parse(text);
  CHECK(back == env);
  CHECK(back["schema_version"] == 1);
  CHECK(back["tool_version"] == std::string(kToolVersion));
  CHECK(back["command"] == "rigidity");
}

TEST_CASE("range serialization marks exactness and unbounded tops") {
  Json exact = json_of(Range::exactly(7));
  CHECK(exact["lo"] == "7");
  CHECK(exact["hi"] == "7");
  CHECK(exact["exact"] == true);

  Range open{0, std::numeric_limits<long long>::max()};
  Json j = json_of(open);
  CHECK(j["hi"] == "unbounded");
  CHECK(j["exact"] == false);
}

TEST_CASE("csv and md renderings carry the json numbers") {
  FlagType ft{4, 4, {4, 2}, {4, 2}};
  AssumptionLog log;
  FamilyResult fr = family_h01(ft, Family::T, 2, 0, &log);
  Json env = envelope(ft, "cohomology", json_of(fr), log);

  std::map<std::string, std::string> leaves;
  flatten(env["payload"], "payload", leaves);
  REQUIRE(!leaves.empty());

  for (OutputFormat fmt : {OutputFormat::Csv, OutputFormat::Md}) {
    std::string text = render(env, fmt);
    for (const auto& [key, val] : leaves) {
      INFO(key << " = " << val);
      CHECK(text.find(val) != std::string::npos);
    }
  }
}

TEST_CASE("format names") {
  CHECK(format_from_name("json") == OutputFormat::Json);
  CHECK(format_from_name("csv") == OutputFormat::Csv);
  CHECK(format_from_name("md") == OutputFormat::Md);
  CHECK_FALSE(format_from_name("yaml").has_value());
}

TEST_CASE("cache stores and reloads identical payloads") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  SheafId id{Family::T, 2, 0};
  std::string key = ResultCache::cohomology_key(desk(), id);

  CHECK_FALSE(cache.load(key).has_value());
  Json payload = {{"h0", json_of(Range::exactly(0))},
                  {"h1", json_of(Range::exactly(1))}};
  cache.store(key, payload);
  auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(*hit == payload);

  // A different flag type misses.
  std::string other = ResultCache::cohomology_key(FlagType{4, 4, {4, 2}, {4, 2}}, id);
  CHECK(other != key);
  CHECK_FALSE(cache.load(other).has_value());
}

TEST_CASE("corrupt cache entries miss instead of loading") {
  TempDir tmp;
  ResultCache cache(tmp.path.string());
  std::string key = ResultCache::cohomology_key(desk(), SheafId{Family::O, 1, 0});
  cache.store(key, Json{{"v", "1"}});
  REQUIRE(cache.load(key).has_value());

  // Replace every cache file with non-JSON bytes: parse failure misses.
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    FILE* f = std::fopen(entry.path().c_str(), "w");
    REQUIRE(f);
    std::fputs("garbage", f);
    std::fclose(f);
  }
  CHECK_FALSE(cache.load(key).has_value());

  // Valid JSON whose payload no longer matches its checksum also misses.
  cache.store(key, Json{{"v", "1"}});
  REQUIRE(cache.load(key).has_value());
  for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
    std::ifstream in(entry.path());
    Json j = Json::parse(in);
    in.close();
    j["payload"]["v"] = "2";
    std::ofstream out(entry.path());
    out << j.dump();
  }
  CHECK_FALSE(cache.load(key).has_value());
}

TEST_CASE("cache keys include the tool version") {
  std::string key =
      ResultCache::cohomology_key(desk(), SheafId{Family::A, 0, 0});
  CHECK(key.find(kToolVersion) != std::string::npos);
}

TEST_CASE("verdict payload carries the graded table and the verdict") {
  RigidityVerdict rv = rigidity_report(FlagType{4, 4, {4, 2}, {4, 2}});
  Json j = json_of(rv);
  CHECK(j["verdict"] == "Rigid");
  CHECK(j["h1_T"]["exact"] == true);
  CHECK(j["h1_T"]["lo"] == "0");
  REQUIRE(j.contains("graded_tangent"));
  CHECK(!j["graded_tangent"].empty());
}
