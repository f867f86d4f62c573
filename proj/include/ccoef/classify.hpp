#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccoef/coefficient.hpp"

namespace ccoef {

/// Raised when two coefficients were not computed under the same parameters.
class IncomparableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// |c| < epsilon. Throws std::invalid_argument unless epsilon > 0.
bool is_zero_computer(const CoefficientResult& result, double epsilon);

/// c > epsilon: the system responds to its input with positive slope.
bool computes(const CoefficientResult& result, double epsilon);

/// Coefficients of one system over a declared finite set of (t_max, n) points.
struct CoefficientGrid {
  std::vector<CoefficientResult> points;
};

struct GridAxis {
  std::vector<std::size_t> t_max;
  std::vector<std::size_t> n;
};

/// Every (t_max, n) combination of `axis` on a Gray family of `width` cells.
CoefficientGrid coefficient_grid(const RuleTable& rule, const GridAxis& axis, std::size_t width,
                                 const CoefficientOptions& options = {});

/// Equal coefficients at every grid point. When `zero_band` is given,
/// coefficients with magnitude below it count as exactly zero, so all
/// 0-computers on the grid fall into one class. Throws IncomparableError when
/// the grids differ in shape or parameters.
bool behaviourally_equivalent(const CoefficientGrid& a, const CoefficientGrid& b,
                              std::optional<double> zero_band = std::nullopt);

/// |c_a - c_b| < c. Throws IncomparableError on parameter mismatch and
/// std::invalid_argument unless c > 0.
bool c_equivalent(const CoefficientResult& a, const CoefficientResult& b, double c);

/// Rules whose coefficients set the default zero band.
inline const std::vector<unsigned> kInertRules{0, 255, 204, 51};

/// Constant-0, constant-(k-1), identity and colour-negation rules for any k
/// and r; for elementary automata these are rules 0, 255, 204 and 51.
std::vector<RuleTable> inert_rules(int colours = 2, int radius = 1);

inline constexpr double kMinimumZeroBand = 1e-12;

/// Twice the largest |c| among `inert`, floored at kMinimumZeroBand.
double calibrate_zero_band(const std::vector<CoefficientResult>& inert);

/// Deterministic one-dimensional k-means. Seeds are the minimum value followed
/// by repeated farthest points (ties to the smaller value); Lloyd iterations
/// run on the sorted values so the partition only depends on the multiset of
/// values. Labels are 1..k in ascending centroid order.
std::vector<int> kmeans_1d(const std::vector<double>& values, int clusters = 4);

struct SweepParams {
  std::size_t t_max = 200;
  std::size_t n = 40;
  std::size_t width = 61;
  CoefficientOptions options{};
  std::optional<double> epsilon;  // calibrated from kInertRules when empty
  bool cluster = true;
  std::size_t workers = 0;  // 0 = default_worker_count()
};

struct SweepReport {
  /// entries[i] belongs to rules[i].
  std::vector<unsigned> rules;
  std::vector<CoefficientResult> entries;
  /// Rule numbers by descending coefficient, ties by ascending rule number.
  std::vector<unsigned> ranking;
  /// Cluster label per entry (1..4), empty when clustering is disabled.
  std::vector<int> clusters;
  double epsilon = 0.0;
  std::string manifest_ref;

  const CoefficientResult& entry(unsigned rule) const;
  /// 1-based position of `rule` in the ranking.
  std::size_t rank_of(unsigned rule) const;
  int cluster_of(unsigned rule) const;
};

/// Ranking of rule ids by descending value, ties by ascending id.
std::vector<unsigned> rank_rules(const std::vector<unsigned>& rules, const std::vector<double>& values);

/// Coefficients for the given elementary rules (all 256 by default).
SweepReport sweep_eca(const SweepParams& params, const std::vector<unsigned>& rules = {});

/// Which way a rule sits with the inert rules 0 and 255.
struct ZeroBandGrouping {
  bool shares_cluster = false;  // same cluster as rule 0 or rule 255
  bool within_double_band = false;  // |c| < 2 epsilon
  bool holds() const noexcept { return shares_cluster || within_double_band; }
  std::string describe() const;
};

ZeroBandGrouping zero_band_grouping(const SweepReport& report, unsigned rule);

}  // namespace ccoef
