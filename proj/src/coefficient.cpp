#include "ccoef/coefficient.hpp"

#include <algorithm>
#include <cmath>

#include "ccoef/complexity.hpp"
#include "ccoef/engine.hpp"
#include "ccoef/life.hpp"
#include "ccoef/parallel.hpp"

namespace ccoef {
namespace {

using SizeMatrix = std::vector<std::vector<std::uint64_t>>;  // [sample][member]

template <class MemberStream>
SizeMatrix member_sizes(std::size_t members, const std::vector<std::size_t>& samples, bool include_input_row,
                        std::size_t workers, MemberStream&& stream_for) {
  SizeMatrix sizes(samples.size(), std::vector<std::uint64_t>(members));
  parallel_for(members, workers, [&](std::size_t j) {
    const RowStream stream = stream_for(j);
    for (std::size_t p = 0; p < samples.size(); ++p) {
      const std::size_t rows = samples[p] + (include_input_row ? 1 : 0);
      sizes[p][j] = compressed_size(stream.prefix(rows));
    }
  });
  return sizes;
}

VariabilityCurve curve_from_sizes(const SizeMatrix& sizes, const std::vector<std::size_t>& samples) {
  VariabilityCurve curve;
  curve.points.reserve(samples.size());
  for (std::size_t p = 0; p < samples.size(); ++p)
    curve.points.push_back({samples[p], normalized_difference_sum(sizes[p], samples[p])});
  return curve;
}

void require_pairs(std::size_t members) {
  if (members < 2) throw std::invalid_argument("difference sums need a family of at least two inputs");
}

CoefficientResult finish(VariabilityCurve curve, RunParams params) {
  CoefficientResult result;
  result.fit = fit_phi(curve);
  result.c_value = result.fit.slope;
  result.params = std::move(params);
  result.curve = std::move(curve);
  return result;
}

TimeGrid resolve_grid(std::size_t t_max, const CoefficientOptions& options) {
  TimeGrid grid = TimeGrid::defaults_for(t_max);
  if (options.t_min) {
    grid.t_min = *options.t_min;
    if (!options.stride && grid.t_max > grid.t_min) grid.stride = std::max<std::size_t>(1, (t_max - grid.t_min) / 15);
  }
  if (options.stride) grid.stride = *options.stride;
  grid.validate();
  return grid;
}

}  // namespace

TimeGrid TimeGrid::defaults_for(std::size_t t_max) {
  TimeGrid grid;
  grid.t_max = t_max;
  grid.t_min = std::max<std::size_t>(4, t_max / 8);
  grid.stride = t_max > grid.t_min ? std::max<std::size_t>(1, (t_max - grid.t_min) / 15) : 1;
  return grid;
}

void TimeGrid::validate() const {
  if (t_min < 1) throw std::invalid_argument("t_min must be at least 1");
  if (t_min >= t_max)
    throw std::invalid_argument("need t_min < t_max (got t_min=" + std::to_string(t_min) +
                                ", t_max=" + std::to_string(t_max) + ")");
  if (stride < 1) throw std::invalid_argument("stride must be at least 1");
}

std::vector<std::size_t> TimeGrid::samples() const {
  validate();
  std::vector<std::size_t> out;
  for (std::size_t t = t_min; t <= t_max; t += stride) out.push_back(t);
  if (out.empty()) throw std::invalid_argument("time grid has no samples");
  return out;
}

std::string RunParams::mismatch(const RunParams& o) const {
  if (model != o.model) return "model";
  if (time != o.time) return "time grid";
  if (n != o.n) return "n";
  if (width != o.width) return "width";
  if (height != o.height) return "height";
  if (boundary != o.boundary) return "boundary";
  if (compressor_id != o.compressor_id) return "compressor_id";
  if (family != o.family) return "family";
  if (include_input_row != o.include_input_row) return "include_input_row";
  return {};
}

bool RunParams::comparable_with(const RunParams& other) const { return mismatch(other).empty(); }

double normalized_difference_sum(std::span<const std::uint64_t> sizes, std::size_t t) {
  require_pairs(sizes.size());
  if (t == 0) throw std::invalid_argument("t must be at least 1");
  std::uint64_t total = 0;
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j)
    total += sizes[j] > sizes[j + 1] ? sizes[j] - sizes[j + 1] : sizes[j + 1] - sizes[j];
  return static_cast<double>(total) / (static_cast<double>(t) * static_cast<double>(sizes.size() - 1));
}

double difference_sum(const RuleTable& rule, const InputFamily& family, std::size_t t, bool include_input_row) {
  require_pairs(family.size());
  std::vector<std::uint64_t> sizes;
  sizes.reserve(family.size());
  for (const auto& member : family.members) sizes.push_back(complexity_C(rule, member, t, include_input_row).bits);
  return normalized_difference_sum(sizes, t);
}

VariabilityCurve variability_curve(const RuleTable& rule, const InputFamily& family, std::size_t t_min,
                                   std::size_t t_max, std::size_t stride, const CoefficientOptions& options) {
  require_pairs(family.size());
  const auto samples = TimeGrid{t_min, t_max, stride}.samples();
  const auto sizes =
      member_sizes(family.size(), samples, options.include_input_row, options.workers, [&](std::size_t j) {
        return RowStream(evolve(rule, family.members[j], t_max), options.include_input_row);
      });
  VariabilityCurve curve = curve_from_sizes(sizes, samples);
  curve.n = family.size();
  curve.family = family.descriptor();
  curve.rule_id = rule.id();
  return curve;
}

VariabilityCurve variability_curve(const LifeRule& rule, const LifeFamily& family, std::size_t t_min, std::size_t t_max,
                                   std::size_t stride, const CoefficientOptions& options) {
  require_pairs(family.size());
  const auto samples = TimeGrid{t_min, t_max, stride}.samples();
  const auto sizes =
      member_sizes(family.size(), samples, options.include_input_row, options.workers, [&](std::size_t j) {
        return RowStream(evolve_life(family.members[j], t_max, rule), options.include_input_row);
      });
  VariabilityCurve curve = curve_from_sizes(sizes, samples);
  curve.n = family.size();
  curve.family = family.descriptor();
  curve.rule_id = rule.id();
  return curve;
}

FitResult fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit needs as many abscissae as ordinates");
  const std::size_t m = xs.size();
  if (m < 2) throw std::invalid_argument("fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw DegenerateFitError("all sample times coincide; slope undefined");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    sse += r * r;
  }
  fit.rmse = std::sqrt(sse / static_cast<double>(m));
  fit.point_count = m;
  return fit;
}

FitResult fit_phi(const VariabilityCurve& curve) {
  std::vector<double> xs, ys;
  xs.reserve(curve.points.size());
  ys.reserve(curve.points.size());
  for (const auto& p : curve.points) {
    xs.push_back(static_cast<double>(p.t));
    ys.push_back(p.s);
  }
  return fit_line(xs, ys);
}

CoefficientResult coefficient_C(const RuleTable& rule, const InputFamily& family, std::size_t t_max,
                                const CoefficientOptions& options) {
  require_pairs(family.size());
  const TimeGrid grid = resolve_grid(t_max, options);
  VariabilityCurve curve = variability_curve(rule, family, grid.t_min, grid.t_max, grid.stride, options);

  RunParams params;
  params.rule_id = rule.id();
  params.model = "ca1d";
  params.time = grid;
  params.n = family.size();
  params.width = family.width();
  params.height = 1;
  params.boundary = family.members.front().boundary().describe();
  params.compressor_id = compressor_id();
  params.family = family.descriptor();
  params.include_input_row = options.include_input_row;
  return finish(std::move(curve), std::move(params));
}

CoefficientResult coefficient_C(const LifeRule& rule, const LifeFamily& family, std::size_t t_max,
                                const CoefficientOptions& options) {
  require_pairs(family.size());
  const TimeGrid grid = resolve_grid(t_max, options);
  VariabilityCurve curve = variability_curve(rule, family, grid.t_min, grid.t_max, grid.stride, options);

  RunParams params;
  params.rule_id = rule.id();
  params.model = "life";
  params.time = grid;
  params.n = family.size();
  params.width = family.width();
  params.height = family.height();
  params.boundary = "cyclic";
  params.compressor_id = compressor_id();
  params.family = family.descriptor();
  params.include_input_row = options.include_input_row;
  return finish(std::move(curve), std::move(params));
}

}  // namespace ccoef
