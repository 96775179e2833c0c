#include "flagrig/report.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace flagrig {

const char* kToolVersion = "1.0.0";

namespace {

std::string dec(long long v) { return std::to_string(v); }

}  // namespace

Json json_of(const BigInt& v) { return v.convert_to<std::string>(); }

Json json_of(const Range& r) {
  Json j;
  j["lo"] = dec(r.lo);
  j["hi"] = r.hi == std::numeric_limits<long long>::max()
                ? Json("unbounded")
                : Json(dec(r.hi));
  j["exact"] = r.exact();
  return j;
}

Json json_of(const FamilyResult& r) {
  return Json{{"h0", json_of(r.h0)}, {"h1", json_of(r.h1)}};
}

Json json_of(const ValidatedFlagType& v) {
  Json j;
  j["m"] = v.ft.m;
  j["n"] = v.ft.n;
  j["k"] = v.ft.k;
  j["l"] = v.ft.l;
  j["generic"] = v.generic;
  j["admissible"] = v.admissible;
  if (!v.violation.empty()) j["violation"] = v.violation;
  return j;
}

Json json_of(const CohomologyTable& t) {
  Json j;
  j["mode"] = t.mode == TableMode::Exact ? "exact" : "upper_bound";
  Json degs = Json::array();
  for (std::size_t d = 0; d < t.degrees.size(); ++d) {
    Json deg;
    deg["degree"] = static_cast<int>(d);
    deg["total"] = json_of(t.totals[d]);
    Json cons = Json::array();
    for (const Constituent& c : t.degrees[d]) {
      Json e;
      e["mu"] = c.hw.mu;
      e["la"] = c.hw.la;
      e["mult"] = json_of(c.mult);
      e["dim"] = json_of(c.dim);
      cons.push_back(e);
    }
    deg["constituents"] = cons;
    degs.push_back(deg);
  }
  j["degrees"] = degs;
  return j;
}

Json json_of(const RigidityVerdict& rv) {
  Json j;
  j["flag_type"] = json_of(rv.vft);
  j["verdict"] = verdict_name(rv.verdict);
  j["h1_T2"] = json_of(rv.h1_T2);
  j["h1_T"] = json_of(rv.h1_T);
  Json gt = Json::array();
  for (const auto& [p, res] : rv.graded_tangent) {
    Json e = json_of(res);
    e["p"] = p;
    gt.push_back(e);
  }
  j["graded_tangent"] = gt;
  Json cells = Json::array();
  for (const auto& [key, res] : rv.cells) {
    Json e = json_of(res);
    e["family"] = family_name(key.family);
    e["p"] = key.p;
    e["q"] = key.q;
    cells.push_back(e);
  }
  j["cells"] = cells;
  j["assumption_log"] = rv.assumption_log;
  j["notes"] = rv.notes;
  return j;
}

Json json_of(const CocycleDims& d) {
  return Json{{"z1", dec(d.z1)}, {"b1", dec(d.b1)}, {"h1", dec(d.h1)}};
}

Json envelope(const FlagType& ft, const std::string& command, Json payload,
              const AssumptionLog& log) {
  Json j;
  j["schema_version"] = 1;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  Json in;
  in["m"] = ft.m;
  in["n"] = ft.n;
  in["k"] = ft.k;
  in["l"] = ft.l;
  j["input"] = in;
  j["payload"] = std::move(payload);
  j["assumption_log"] = log;
  return j;
}

std::optional<OutputFormat> format_from_name(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md") return OutputFormat::Md;
  return std::nullopt;
}

namespace {

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
              rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render(const Json& env, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return env.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(env, "", rows);
  std::ostringstream os;
  if (fmt == OutputFormat::Csv) {
    os << "key,value\n";
    for (const auto& [k, v] : rows)
      os << csv_escape(k) << "," << csv_escape(v) << "\n";
  } else {
    os << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) os << "| " << k << " | " << v << " |\n";
  }
  return os.str();
}

namespace {

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::string ResultCache::cohomology_key(const FlagType& ft, const SheafId& id) {
  std::ostringstream os;
  os << "v" << kToolVersion << "|" << ft.to_string() << "|" << id.to_string();
  return os.str();
}

std::string ResultCache::path_for(const std::string& key) const {
  return dir_ + "/" + fnv1a_hex(key) + ".json";
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (dir_.empty()) return std::nullopt;
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (...) {
    return std::nullopt;
  }
  if (!j.is_object() || !j.contains("key") || !j.contains("payload") ||
      !j.contains("checksum"))
    return std::nullopt;
  if (j["key"] != key) return std::nullopt;
  if (j["checksum"] != fnv1a_hex(j["payload"].dump())) return std::nullopt;
  return j["payload"];
}

void ResultCache::store(const std::string& key, const Json& value) const {
  if (dir_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  Json j;
  j["key"] = key;
  j["payload"] = value;
  j["checksum"] = fnv1a_hex(value.dump());
  const std::string final_path = path_for(key);
  const std::string tmp_path =
      final_path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp_path);
    out << j.dump();
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace flagrig
