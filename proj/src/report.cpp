#include "ccoef/report.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "ccoef/complexity.hpp"

namespace ccoef {
namespace {

std::string pbm_header(std::size_t width, std::size_t height, const std::string& manifest_ref) {
  std::ostringstream out;
  out << "P4\n# " << kPbmSchema << " manifest=" << manifest_ref << "\n" << width << " " << height << "\n";
  return out.str();
}

std::string csv_comment(const char* schema, const std::string& manifest_ref) {
  return std::string("# schema=") + schema + " manifest=" + manifest_ref + "\n";
}

}  // namespace

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return out.str();
}

std::string sha256_hex(const std::string& text) {
  return sha256_hex(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string pbm_p4(const Evolution& evolution, const std::string& manifest_ref) {
  const std::size_t width = evolution.width();
  std::string out = pbm_header(width, evolution.rows().size(), manifest_ref);
  const std::size_t row_bytes = (width + 7) / 8;
  for (const auto& row : evolution.rows()) {
    if (row.packed()) {
      out.append(reinterpret_cast<const char*>(row.storage().data()), row_bytes);
      continue;
    }
    std::string packed(row_bytes, '\0');
    for (std::size_t i = 0; i < width; ++i)
      if (row[i]) packed[i >> 3] = static_cast<char>(packed[i >> 3] | (0x80 >> (i & 7)));
    out += packed;
  }
  return out;
}

std::string pbm_p4(const LifeGrid& grid, const std::string& manifest_ref) {
  std::string out = pbm_header(grid.width(), grid.height(), manifest_ref);
  const std::size_t row_bytes = (grid.width() + 7) / 8;
  for (std::size_t y = 0; y < grid.height(); ++y) {
    std::string packed(row_bytes, '\0');
    for (std::size_t x = 0; x < grid.width(); ++x)
      if (grid(y, x)) packed[x >> 3] = static_cast<char>(packed[x >> 3] | (0x80 >> (x & 7)));
    out += packed;
  }
  return out;
}

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return {buffer, end};
}

Json to_json(const TimeGrid& grid) {
  return {{"t_min", grid.t_min}, {"t_max", grid.t_max}, {"stride", grid.stride}};
}

Json to_json(const RunParams& p) {
  return {{"rule_id", p.rule_id},
          {"model", p.model},
          {"t", p.time.t_max},
          {"time_grid", to_json(p.time)},
          {"n", p.n},
          {"width", p.width},
          {"height", p.height},
          {"boundary", p.boundary},
          {"compressor_id", p.compressor_id},
          {"family", p.family},
          {"include_input_row", p.include_input_row}};
}

Json to_json(const FitResult& fit) {
  return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"rmse", fit.rmse}, {"point_count", fit.point_count}};
}

Json to_json(const CoefficientResult& result) {
  return {{"c_value", result.c_value}, {"fit", to_json(result.fit)}, {"params", to_json(result.params)}};
}

std::string curve_csv(const VariabilityCurve& curve, const std::string& manifest_ref) {
  std::string out = csv_comment(kCurveSchema, manifest_ref);
  out += "t_prime,S\n";
  for (const auto& p : curve.points) out += std::to_string(p.t) + "," + format_double(p.s) + "\n";
  return out;
}

std::string sweep_csv(const SweepReport& report, const std::string& manifest_ref) {
  std::string out = csv_comment(kSweepCsvSchema, manifest_ref);
  out += "rule,c_value,rmse,rank,cluster\n";
  for (std::size_t i = 0; i < report.rules.size(); ++i) {
    const unsigned rule = report.rules[i];
    out += std::to_string(rule) + "," + format_double(report.entries[i].c_value) + "," +
           format_double(report.entries[i].fit.rmse) + "," + std::to_string(report.rank_of(rule)) + "," +
           (report.clusters.empty() ? std::string() : std::to_string(report.clusters[i])) + "\n";
  }
  return out;
}

Json sweep_json(const SweepReport& report) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < report.rules.size(); ++i) {
    Json e = to_json(report.entries[i]);
    e["rule"] = report.rules[i];
    e["rank"] = report.rank_of(report.rules[i]);
    if (!report.clusters.empty()) e["cluster"] = report.clusters[i];
    entries.push_back(std::move(e));
  }
  Json grid = report.entries.empty() ? Json::object() : to_json(report.entries.front().params);
  grid.erase("rule_id");
  return {{"schema", kSweepSchema},   {"manifest", report.manifest_ref}, {"epsilon", report.epsilon},
          {"grid", grid},             {"ranking", report.ranking},       {"entries", entries}};
}

void OutputSet::add(std::string name, std::string contents) {
  if (name.empty() || name.find('/') != std::string::npos) throw std::invalid_argument("bad output name: " + name);
  files_[std::move(name)] = std::move(contents);
}

void OutputSet::add(std::string name, std::span<const std::uint8_t> contents) {
  add(std::move(name), std::string(reinterpret_cast<const char*>(contents.data()), contents.size()));
}

std::map<std::string, std::string> OutputSet::hashes() const {
  std::map<std::string, std::string> out;
  for (const auto& [name, contents] : files_) out[name] = sha256_hex(contents);
  return out;
}

void OutputSet::commit(const std::filesystem::path& directory) const {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::vector<fs::path> staged;
  try {
    for (const auto& [name, contents] : files_) {
      const fs::path tmp = directory / ("." + name + ".partial");
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
      out.close();
      staged.push_back(tmp);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
  } catch (...) {
    for (const auto& p : staged) fs::remove(p);
    throw;
  }
  auto it = staged.begin();
  for (const auto& [name, contents] : files_) fs::rename(*it++, directory / name);
}

Json RunManifest::to_json() const {
  return {{"schema", kManifestSchema}, {"tool_version", tool_version}, {"command_line", command_line},
          {"command", command},        {"parameters", parameters},     {"outputs", outputs},
          {"timestamp", timestamp}};
}

RunManifest RunManifest::from_json(const Json& j) {
  if (j.value("schema", "") != kManifestSchema) throw std::invalid_argument("not a ccoef manifest");
  RunManifest m;
  m.tool_version = j.at("tool_version").get<std::string>();
  m.command_line = j.at("command_line").get<std::vector<std::string>>();
  m.command = j.at("command").get<std::string>();
  m.parameters = j.at("parameters");
  m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
  m.timestamp = j.value("timestamp", "");
  return m;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

}  // namespace ccoef
