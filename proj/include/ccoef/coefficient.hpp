#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccoef/enumeration.hpp"
#include "ccoef/rule_table.hpp"

namespace ccoef {

/// Thrown by fit_phi when every sample shares one abscissa.
class DegenerateFitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CurvePoint {
  std::size_t t = 0;
  double s = 0.0;  // normalized difference sum at t

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

struct VariabilityCurve {
  std::vector<CurvePoint> points;
  std::size_t n = 0;
  std::string family;
  std::string rule_id;

  friend bool operator==(const VariabilityCurve&, const VariabilityCurve&) = default;
};

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double rmse = 0.0;
  std::size_t point_count = 0;

  friend bool operator==(const FitResult&, const FitResult&) = default;
};

/// Sampled runtimes t_min, t_min + stride, ... <= t_max.
struct TimeGrid {
  std::size_t t_min = 0;
  std::size_t t_max = 0;
  std::size_t stride = 1;

  /// t_min = max(4, t_max / 8), stride = max(1, (t_max - t_min) / 15), which
  /// yields at least 16 samples whenever t_max - t_min >= 15.
  static TimeGrid defaults_for(std::size_t t_max);

  /// Throws std::invalid_argument unless 1 <= t_min < t_max and stride >= 1.
  void validate() const;
  std::vector<std::size_t> samples() const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

/// Everything a coefficient depends on. Two results are comparable only when
/// all fields but rule_id agree.
struct RunParams {
  std::string rule_id;
  std::string model = "ca1d";  // "ca1d" or "life"
  TimeGrid time;
  std::size_t n = 0;
  std::size_t width = 0;
  std::size_t height = 1;
  std::string boundary;
  std::string compressor_id;
  std::string family;
  bool include_input_row = true;

  bool comparable_with(const RunParams& other) const;
  /// First field that differs from `other` (ignoring rule_id), or empty.
  std::string mismatch(const RunParams& other) const;

  friend bool operator==(const RunParams&, const RunParams&) = default;
};

struct CoefficientResult {
  double c_value = 0.0;  // always fit.slope
  FitResult fit;
  RunParams params;
  VariabilityCurve curve;
};

struct CoefficientOptions {
  std::optional<std::size_t> t_min;
  std::optional<std::size_t> stride;
  bool include_input_row = true;
  /// Worker threads for evaluating inputs; 0 selects default_worker_count().
  std::size_t workers = 1;
};

/// Sum over consecutive pairs |C_j - C_{j+1}| divided by t (n - 1), where C
/// holds one compressed size per family member at runtime t.
double normalized_difference_sum(std::span<const std::uint64_t> sizes, std::size_t t);

/// S(t) for a rule over a family; recomputes every evolution.
double difference_sum(const RuleTable& rule, const InputFamily& family, std::size_t t,
                      bool include_input_row = true);

/// One point per sampled runtime. Each member is evolved once to t_max and the
/// compressed size of every needed prefix is computed once.
VariabilityCurve variability_curve(const RuleTable& rule, const InputFamily& family, std::size_t t_min,
                                   std::size_t t_max, std::size_t stride,
                                   const CoefficientOptions& options = {});

VariabilityCurve variability_curve(const LifeRule& rule, const LifeFamily& family, std::size_t t_min, std::size_t t_max,
                                   std::size_t stride, const CoefficientOptions& options = {});

/// Ordinary least squares line through the curve points.
FitResult fit_phi(const VariabilityCurve& curve);
FitResult fit_line(std::span<const double> xs, std::span<const double> ys);

/// Slope of the fitted variability curve up to t_max.
CoefficientResult coefficient_C(const RuleTable& rule, const InputFamily& family, std::size_t t_max,
                                const CoefficientOptions& options = {});

/// Two-dimensional counterpart on gray_patches() style inputs.
CoefficientResult coefficient_C(const LifeRule& rule, const LifeFamily& family, std::size_t t_max, const CoefficientOptions& options = {});

}  // namespace ccoef
