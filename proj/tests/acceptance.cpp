// Acceptance run: one PASS/FAIL line per criterion, INFO lines for context.
// Exit status is nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccoef/classify.hpp"
#include "ccoef/coefficient.hpp"
#include "ccoef/complexity.hpp"
#include "ccoef/engine.hpp"
#include "ccoef/enumeration.hpp"
#include "ccoef/life.hpp"
#include "ccoef/report.hpp"
#include "reference.hpp"

using namespace ccoef;
namespace fs = std::filesystem;

namespace {

// Default parameters and budgets.
constexpr std::size_t kT = 200;
constexpr std::size_t kN = 40;
constexpr std::size_t kWidth = 61;
constexpr double kInertBudgetSeconds = 10.0;
constexpr double kSweepBudgetSeconds = 300.0;
constexpr double kLifeBudgetSeconds = 60.0;
constexpr std::size_t kTopQuartileRank = 64;  // ranks 1..64 of 256
constexpr std::size_t kOracleInstances = 24;
constexpr std::size_t kGrayLimit = 1024;
constexpr std::size_t kLightConeCases = 200;
constexpr std::size_t kRoundTripCases = 200;

int failures = 0;

void report(const char* id, const char* name, bool pass, const std::string& detail) {
  std::printf("%s %s %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void info(const std::string& line) {
  std::printf("INFO %s\n", line.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Linear interpolation between order statistics.
double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

void inert_zero_band() {
  const auto start = std::chrono::steady_clock::now();
  const auto family = gray_initials(kN, kWidth);
  std::vector<CoefficientResult> inert;
  for (const auto& rule : inert_rules()) inert.push_back(coefficient_C(rule, family, kT));
  const double eps = calibrate_zero_band(inert);
  const double elapsed = seconds_since(start);
  bool all = true;
  std::string detail = "eps=" + fmt(eps);
  for (std::size_t i = 0; i < inert.size(); ++i) {
    const bool zero = std::fabs(inert[i].c_value) <= eps && is_zero_computer(inert[i], eps);
    all = all && zero;
    detail += " R" + std::to_string(kInertRules[i]) + "=" + fmt(inert[i].c_value);
  }
  detail += " time=" + fmt(elapsed) + "s";
  report("C1", "inert-zero-band", all && elapsed < kInertBudgetSeconds, detail);
}

SweepReport timed_sweep(std::size_t width, std::size_t workers, double& elapsed) {
  SweepParams p;
  p.t_max = kT;
  p.n = kN;
  p.width = width;
  p.workers = workers;
  const auto start = std::chrono::steady_clock::now();
  SweepReport r = sweep_eca(p);
  elapsed = seconds_since(start);
  return r;
}

struct OrderingOutcome {
  bool pass = false;
  std::string detail;
};

OrderingOutcome exemplar_ordering(const SweepReport& r) {
  std::vector<double> values;
  for (const auto& e : r.entries) values.push_back(e.c_value);
  const double iqr = quantile(values, 0.75) - quantile(values, 0.25);
  const double c110 = r.entry(110).c_value;
  const bool above0 = c110 > r.entry(0).c_value;
  const bool above255 = c110 > r.entry(255).c_value;
  const bool above30 = c110 > r.entry(30).c_value;
  const bool top110 = r.rank_of(110) <= kTopQuartileRank;
  const bool top122 = r.rank_of(122) <= kTopQuartileRank;
  const bool top89 = r.rank_of(89) <= kTopQuartileRank;
  const bool close = iqr > 0.0 && c_equivalent(r.entry(122), r.entry(89), iqr);

  OrderingOutcome o;
  o.pass = above0 && above255 && above30 && top110 && top122 && top89 && close;
  std::ostringstream d;
  d << "R110=" << fmt(c110) << (above0 ? ">" : "<=") << "R0=" << fmt(r.entry(0).c_value) << ", "
    << (above255 ? ">" : "<=") << "R255=" << fmt(r.entry(255).c_value) << ", " << (above30 ? ">" : "<=")
    << "R30=" << fmt(r.entry(30).c_value) << "; rank R110=" << r.rank_of(110) << " R122=" << r.rank_of(122)
    << " R89=" << r.rank_of(89) << " (top quartile <= " << kTopQuartileRank << "); |R122-R89|="
    << fmt(std::fabs(r.entry(122).c_value - r.entry(89).c_value)) << (close ? " < " : " >= ") << "IQR=" << fmt(iqr);
  o.detail = d.str();
  return o;
}

void ordering_and_grouping(SweepReport& defaults_report) {
  double elapsed = 0.0;
  defaults_report = timed_sweep(kWidth, 0, elapsed);
  auto outcome = exemplar_ordering(defaults_report);
  report("C2", "exemplar-ordering", outcome.pass && elapsed < kSweepBudgetSeconds,
         outcome.detail + "; sweep time=" + fmt(elapsed) + "s");

  const auto g = zero_band_grouping(defaults_report, 30);
  report("C3", "r30-grouping", g.holds(),
         "disjunct=" + g.describe() + " R30=" + fmt(defaults_report.entry(30).c_value) + " cluster=" +
             std::to_string(defaults_report.cluster_of(30)) + " (R0 cluster=" +
             std::to_string(defaults_report.cluster_of(0)) + ", R255 cluster=" +
             std::to_string(defaults_report.cluster_of(255)) + ") eps=" + fmt(defaults_report.epsilon));

  // Same sweep with rows wide enough that no light cone wraps.
  const std::size_t cone = light_cone_width(bit_width_of(kN - 1), 1, kT);
  const auto wide = timed_sweep(cone, 0, elapsed);
  const auto wide_outcome = exemplar_ordering(wide);
  info("C2 at width " + std::to_string(cone) + ": " + (wide_outcome.pass ? "holds" : "fails") + "; " +
       wide_outcome.detail + "; time=" + fmt(elapsed) + "s");
  info("C3 at width " + std::to_string(cone) + ": " + zero_band_grouping(wide, 30).describe() +
       " R30=" + fmt(wide.entry(30).c_value) + " eps=" + fmt(wide.epsilon));
}

void parity_rule() {
  const auto rule = RuleTable::elementary(132);
  bool all = true;
  std::string detail;
  for (std::size_t size = 2; size <= 9; ++size) {
    const std::size_t width = 3 * size + 8;
    Configuration init(width);
    for (std::size_t i = 0; i < size; ++i) init.set(width / 3 + i, 1);
    const auto evo = evolve(rule, init, 2 * size);
    const auto survivors = evo.rows().back().count(1);
    all = all && survivors == size % 2;
    detail += (detail.empty() ? "" : " ") + std::to_string(size) + "->" + std::to_string(survivors);
  }
  report("C4", "r132-parity", all, detail);
}

void life_positivity() {
  const auto start = std::chrono::steady_clock::now();
  const auto family = gray_patches(16, 32, 32);
  const auto life = coefficient_C(LifeRule::conway(), family, 100);
  std::vector<CoefficientResult> inert;
  for (const auto& r : inert_life_rules()) inert.push_back(coefficient_C(r, family, 100));
  const double eps = calibrate_zero_band(inert);
  const double elapsed = seconds_since(start);
  report("C5", "life-positivity", computes(life, eps) && elapsed < kLifeBudgetSeconds,
         "C(B3/S23)=" + fmt(life.c_value) + " eps=" + fmt(eps) + " rmse=" + fmt(life.fit.rmse) +
             " time=" + fmt(elapsed) + "s");
}

void oracle_equivalence() {
  std::mt19937_64 gen(20240601);
  std::size_t agree = 0;
  std::string first_mismatch;
  for (std::size_t i = 0; i < kOracleInstances; ++i) {
    const unsigned number = static_cast<unsigned>(gen() % 256);
    const std::size_t n = 2 + gen() % 39;
    const std::size_t t = 8 + gen() % 120;
    const std::size_t width = bit_width_of(n - 1) + gen() % 60;
    double fast = 0.0;
    std::vector<reference::Row> rows;
    if (i % 4 == 3) {
      const auto family = random_initials(n, std::max<std::size_t>(width, 8), gen(), 0.5);
      for (const auto& m : family.members) rows.push_back(m.cells());
      fast = coefficient_C(RuleTable::elementary(number), family, t).c_value;
    } else {
      rows = reference::gray_rows(n, width);
      fast = coefficient_C(RuleTable::elementary(number), gray_initials(n, width), t).c_value;
    }
    const double slow = reference::coefficient(reference::decode(number), rows, t);
    if (fast == slow) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = " first mismatch rule=" + std::to_string(number) + " n=" + std::to_string(n) +
                       " t=" + std::to_string(t);
    }
  }
  report("C6", "oracle-equivalence", agree == kOracleInstances,
         std::to_string(agree) + "/" + std::to_string(kOracleInstances) + " bit-exact" + first_mismatch);
}

bool gray_hamming() {
  for (std::size_t n = 2; n <= kGrayLimit; ++n) {
    const auto f = gray_initials(n, bit_width_of(n - 1));
    std::set<std::string> seen;
    for (std::size_t j = 0; j < n; ++j) {
      seen.insert(f.members[j].to_string());
      if (j > 0 && hamming_distance(f.members[j - 1], f.members[j]) != 1) return false;
    }
    if (seen.size() != n) return false;
  }
  return true;
}

bool light_cone() {
  std::mt19937_64 gen(7);
  for (std::size_t trial = 0; trial < kLightConeCases; ++trial) {
    const int r = 1 + static_cast<int>(gen() % 2);
    std::vector<std::uint8_t> table(r == 1 ? 8 : 32);
    for (auto& e : table) e = static_cast<std::uint8_t>(gen() & 1);
    const RuleTable rule(2, r, table);
    const std::size_t t = 1 + gen() % 40;
    const std::size_t width = light_cone_width(1, r, t) + 1 + gen() % 30;
    std::vector<std::uint8_t> cells(width);
    for (auto& c : cells) c = static_cast<std::uint8_t>(gen() & 1);
    const auto a = Configuration::from_cells(cells);
    auto b = a;
    const std::size_t p = gen() % width;
    b.set(p, a[p] ^ 1);
    const auto ea = evolve(rule, a, t);
    const auto eb = evolve(rule, b, t);
    for (std::size_t s = 0; s <= t; ++s)
      for (std::size_t i = 0; i < width; ++i) {
        const std::size_t d = std::min((i + width - p) % width, (p + width - i) % width);
        if (d > static_cast<std::size_t>(r) * s && ea.row(s)[i] != eb.row(s)[i]) return false;
      }
  }
  return true;
}

bool round_trip() {
  std::mt19937_64 gen(8);
  for (std::size_t trial = 0; trial < kRoundTripCases; ++trial) {
    const int k = trial % 3 == 0 ? 3 : 2;
    const std::size_t width = 1 + gen() % 120;
    const std::size_t rows = 1 + gen() % 30;
    std::vector<Configuration> r;
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<std::uint8_t> cells(width);
      for (auto& c : cells) c = static_cast<std::uint8_t>(gen() % static_cast<unsigned>(k));
      r.push_back(Configuration::from_cells(cells, k));
    }
    const Evolution e("x", r);
    if (!(deserialize(serialize(e), {rows, width, k, e.boundary(), "x"}) == e)) return false;
  }
  return true;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool manifest_reproducible(std::string& note) {
#ifdef CCOEF_CLI
  const fs::path dir = fs::temp_directory_path() / ("ccoef_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string cli = CCOEF_CLI;
  const std::string quiet = " > /dev/null 2>&1";
  const auto ok = [](int status) { return WIFEXITED(status) && WEXITSTATUS(status) == 0; };
  bool pass = ok(std::system((cli + " coeff --rule 110 --out " + (dir / "a").string() + quiet).c_str())) &&
              ok(std::system((cli + " replay --manifest " + (dir / "a" / "manifest.json").string() + " --out " +
                              (dir / "b").string() + quiet)
                                 .c_str()));
  for (const char* name : {"coeff.json", "curve.csv"})
    pass = pass && sha256_hex(slurp(dir / "a" / name)) == sha256_hex(slurp(dir / "b" / name));
  fs::remove_all(dir);
  note = "cli replay";
  return pass;
#else
  const auto family = gray_initials(kN, kWidth);
  const auto hashes = [&] {
    const auto res = coefficient_C(RuleTable::elementary(110), family, kT);
    OutputSet out;
    out.add("coeff.json", to_json(res).dump(2));
    out.add("curve.csv", curve_csv(res.curve, "manifest.json"));
    return out.hashes();
  };
  note = "in-process rerun";
  return hashes() == hashes();
#endif
}

void invariant_suite(const SweepReport& defaults_report) {
  const bool gray = gray_hamming();
  const bool cone = light_cone();
  const bool trip = round_trip();
  std::string manifest_note;
  const bool manifest = manifest_reproducible(manifest_note);

  double elapsed = 0.0;
  const auto one = timed_sweep(kWidth, 1, elapsed);
  const auto many = timed_sweep(kWidth, 4, elapsed);
  const std::string h1 = sha256_hex(sweep_csv(one, "manifest.json"));
  const std::string h4 = sha256_hex(sweep_csv(many, "manifest.json"));
  const std::string hd = sha256_hex(sweep_csv(defaults_report, "manifest.json"));
  const bool scheduling = h1 == h4 && h1 == hd;

  const auto flag = [](bool b) { return b ? "ok" : "FAILED"; };
  std::ostringstream d;
  d << "gray-hamming<=" << kGrayLimit << ":" << flag(gray) << " light-cone(" << kLightConeCases
    << "):" << flag(cone) << " roundtrip(" << kRoundTripCases << "):" << flag(trip) << " manifest(" << manifest_note
    << "):" << flag(manifest) << " scheduling(1 vs 4 workers):" << flag(scheduling) << " sweep-sha256=" << h1.substr(0, 16);
  report("C7", "invariant-suite", gray && cone && trip && manifest && scheduling, d.str());
}

}  // namespace

int main() {
  info("compressor " + compressor_id());
  info("defaults t=" + std::to_string(kT) + " n=" + std::to_string(kN) + " width=" + std::to_string(kWidth) +
       " family=gray boundary=cyclic");
  SweepReport defaults_report;
  inert_zero_band();
  ordering_and_grouping(defaults_report);
  parity_rule();
  life_positivity();
  oracle_equivalence();
  invariant_suite(defaults_report);
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "NOT ACCEPTED", failures);
  return failures == 0 ? 0 : 1;
}
