#pragma once

// Result serialization (json/csv/md), the versioned result envelope, and a
// content-addressed on-disk cache with checksum validation.

#include "flagrig/bwb.hpp"
#include "flagrig/supercharts.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace flagrig {

using Json = nlohmann::json;

extern const char* kToolVersion;

// Dimension values are emitted as decimal strings so consumers never face
// integer-width ambiguity.
Json json_of(const BigInt& v);
Json json_of(const Range& r);
Json json_of(const FamilyResult& r);
Json json_of(const ValidatedFlagType& v);
Json json_of(const CohomologyTable& t);
Json json_of(const RigidityVerdict& rv);
Json json_of(const CocycleDims& d);

// Shared outer envelope: tool version, input echo, payload, assumption log.
Json envelope(const FlagType& ft, const std::string& command, Json payload,
              const AssumptionLog& log = {});

enum class OutputFormat { Json, Csv, Md };
std::optional<OutputFormat> format_from_name(const std::string& s);

// CSV / markdown renderings carry the same numbers as the JSON payload.
std::string render(const Json& env, OutputFormat fmt);

// Content-addressed cache: key -> JSON payload, checksummed, written via a
// temporary file plus atomic rename. Corrupt or mismatched entries miss.
class ResultCache {
 public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& value) const;

  static std::string cohomology_key(const FlagType& ft, const SheafId& id);

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace flagrig
