#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccoef/classify.hpp"
#include "ccoef/coefficient.hpp"
#include "ccoef/configuration.hpp"
#include "ccoef/life.hpp"

namespace ccoef {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kCoefficientSchema = "ccoef.coefficient/1";
inline constexpr const char* kCurveSchema = "ccoef.curve.csv/1";
inline constexpr const char* kSweepSchema = "ccoef.sweep/1";
inline constexpr const char* kSweepCsvSchema = "ccoef.sweep.csv/1";
inline constexpr const char* kCompareSchema = "ccoef.compare/1";
inline constexpr const char* kManifestSchema = "ccoef.manifest/1";
inline constexpr const char* kPbmSchema = "ccoef.pbm/1";

std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(const std::string& text);

/// Binary PBM (P4), one image row per evolution row, black = colour 1 (any
/// nonzero colour for k > 2). The comment line carries schema and manifest.
std::string pbm_p4(const Evolution& evolution, const std::string& manifest_ref);
std::string pbm_p4(const LifeGrid& grid, const std::string& manifest_ref);

Json to_json(const TimeGrid& grid);
Json to_json(const RunParams& params);
Json to_json(const FitResult& fit);
/// Coefficient without its curve (the curve goes to CSV).
Json to_json(const CoefficientResult& result);

/// Curve as CSV with header row t_prime,S preceded by a schema comment line.
std::string curve_csv(const VariabilityCurve& curve, const std::string& manifest_ref);

/// Columns rule,c_value,rmse,rank,cluster in rule order.
std::string sweep_csv(const SweepReport& report, const std::string& manifest_ref);
Json sweep_json(const SweepReport& report);

/// Shortest round-trip decimal form, locale independent.
std::string format_double(double value);

/// Files produced by one command, committed together.
///
/// Nothing touches the output directory until commit(): every file is written
/// under a temporary name first and renamed into place once all writes
/// succeeded, so a failed run leaves no partial outputs behind.
class OutputSet {
 public:
  void add(std::string name, std::string contents);
  void add(std::string name, std::span<const std::uint8_t> contents);

  const std::map<std::string, std::string>& files() const noexcept { return files_; }
  /// sha256 per file name.
  std::map<std::string, std::string> hashes() const;

  void commit(const std::filesystem::path& directory) const;

 private:
  std::map<std::string, std::string> files_;
};

struct RunManifest {
  std::string tool_version = kToolVersion;
  std::vector<std::string> command_line;
  std::string command;
  Json parameters = Json::object();
  std::map<std::string, std::string> outputs;  // file name -> sha256
  std::string timestamp;

  Json to_json() const;
  static RunManifest from_json(const Json& j);
};

std::string utc_timestamp();

}  // namespace ccoef
