#include "ccoef/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ccoef/parallel.hpp"

namespace ccoef {
namespace {

void require_comparable(const RunParams& a, const RunParams& b) {
  if (const auto field = a.mismatch(b); !field.empty())
    throw IncomparableError("coefficients computed under different parameters (" + field + ": " + a.rule_id +
                            " vs " + b.rule_id + ")");
}

double snap(double c, std::optional<double> zero_band) {
  if (zero_band && std::fabs(c) < *zero_band) return 0.0;
  return c;
}

}  // namespace

bool is_zero_computer(const CoefficientResult& result, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return std::fabs(result.c_value) < epsilon;
}

bool computes(const CoefficientResult& result, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  return result.c_value > epsilon;
}

CoefficientGrid coefficient_grid(const RuleTable& rule, const GridAxis& axis, std::size_t width,
                                 const CoefficientOptions& options) {
  if (axis.t_max.empty() || axis.n.empty()) throw std::invalid_argument("coefficient grid needs t and n values");
  CoefficientGrid grid;
  for (auto t : axis.t_max)
    for (auto n : axis.n) grid.points.push_back(coefficient_C(rule, gray_initials(n, width, rule.colours()), t, options));
  return grid;
}

bool behaviourally_equivalent(const CoefficientGrid& a, const CoefficientGrid& b, std::optional<double> zero_band) {
  if (zero_band && !(*zero_band > 0.0)) throw std::invalid_argument("zero band must be positive");
  if (a.points.size() != b.points.size())
    throw IncomparableError("coefficient grids have different numbers of points");
  if (a.points.empty()) throw IncomparableError("empty coefficient grid");
  bool equal = true;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    require_comparable(a.points[i].params, b.points[i].params);
    if (snap(a.points[i].c_value, zero_band) != snap(b.points[i].c_value, zero_band)) equal = false;
  }
  return equal;
}

bool c_equivalent(const CoefficientResult& a, const CoefficientResult& b, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("tolerance c must be positive");
  require_comparable(a.params, b.params);
  return std::fabs(a.c_value - b.c_value) < c;
}

std::vector<RuleTable> inert_rules(int colours, int radius) {
  const std::size_t k = static_cast<std::size_t>(colours);
  const std::size_t size = RuleTable::from_number(0, colours, radius).size();
  std::vector<std::uint8_t> zero(size, 0), full(size, static_cast<std::uint8_t>(k - 1)), identity(size), negation(size);
  // The centre cell is digit r counted from the least significant end.
  std::size_t scale = 1;
  for (int i = 0; i < radius; ++i) scale *= k;
  for (std::size_t index = 0; index < size; ++index) {
    const auto centre = static_cast<std::uint8_t>((index / scale) % k);
    identity[index] = centre;
    negation[index] = static_cast<std::uint8_t>(k - 1 - centre);
  }
  return {RuleTable(colours, radius, std::move(zero)), RuleTable(colours, radius, std::move(full)),
          RuleTable(colours, radius, std::move(identity)), RuleTable(colours, radius, std::move(negation))};
}

double calibrate_zero_band(const std::vector<CoefficientResult>& inert) {
  if (inert.empty()) throw std::invalid_argument("zero band calibration needs at least one inert coefficient");
  double worst = 0.0;
  for (const auto& r : inert) worst = std::max(worst, std::fabs(r.c_value));
  return std::max(2.0 * worst, kMinimumZeroBand);
}

std::vector<int> kmeans_1d(const std::vector<double>& values, int clusters) {
  if (clusters < 1) throw std::invalid_argument("need at least one cluster");
  if (values.empty()) return {};
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("k-means values must be finite");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return values[x] < values[y]; });
  std::vector<double> sorted(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = values[order[i]];

  std::vector<double> distinct = sorted;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(clusters), distinct.size());

  // Farthest-point seeding.
  std::vector<double> centroids{distinct.front()};
  while (centroids.size() < k) {
    double best = distinct.front(), best_distance = -1.0;
    for (double v : distinct) {
      double d = std::numeric_limits<double>::infinity();
      for (double c : centroids) d = std::min(d, std::fabs(v - c));
      if (d > best_distance) {
        best_distance = d;
        best = v;
      }
    }
    centroids.push_back(best);
  }
  std::sort(centroids.begin(), centroids.end());

  std::vector<std::size_t> assign;
  for (int iteration = 0; iteration < 1000; ++iteration) {
    std::vector<std::size_t> next(sorted.size(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t c = 1; c < k; ++c)
        if (std::fabs(sorted[i] - centroids[c]) < std::fabs(sorted[i] - centroids[next[i]])) next[i] = c;
    if (next == assign) break;
    assign = std::move(next);
    std::vector<double> sum(k, 0.0);
    std::vector<std::size_t> members(k, 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      sum[assign[i]] += sorted[i];
      ++members[assign[i]];
    }
    for (std::size_t c = 0; c < k; ++c)
      if (members[c] > 0) centroids[c] = sum[c] / static_cast<double>(members[c]);
  }

  // Relabel by ascending centroid; centroids stay ordered in 1-D but an empty
  // cluster could leave a gap, so compact the labels.
  std::vector<std::size_t> used;
  for (auto a : assign)
    if (std::find(used.begin(), used.end(), a) == used.end()) used.push_back(a);
  std::sort(used.begin(), used.end(), [&](auto x, auto y) { return centroids[x] < centroids[y]; });
  std::vector<int> labels(values.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto pos = std::find(used.begin(), used.end(), assign[i]) - used.begin();
    labels[order[i]] = static_cast<int>(pos) + 1;
  }
  return labels;
}

std::vector<unsigned> rank_rules(const std::vector<unsigned>& rules, const std::vector<double>& values) {
  if (rules.size() != values.size()) throw std::invalid_argument("one value per rule required");
  std::vector<std::size_t> idx(rules.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return rules[a] < rules[b];
  });
  std::vector<unsigned> ranking;
  ranking.reserve(idx.size());
  for (auto i : idx) ranking.push_back(rules[i]);
  return ranking;
}

const CoefficientResult& SweepReport::entry(unsigned rule) const {
  const auto it = std::find(rules.begin(), rules.end(), rule);
  if (it == rules.end()) throw std::out_of_range("rule " + std::to_string(rule) + " not in sweep");
  return entries[static_cast<std::size_t>(it - rules.begin())];
}

std::size_t SweepReport::rank_of(unsigned rule) const {
  const auto it = std::find(ranking.begin(), ranking.end(), rule);
  if (it == ranking.end()) throw std::out_of_range("rule " + std::to_string(rule) + " not in sweep");
  return static_cast<std::size_t>(it - ranking.begin()) + 1;
}

int SweepReport::cluster_of(unsigned rule) const {
  if (clusters.empty()) throw std::logic_error("sweep was run without clustering");
  const auto it = std::find(rules.begin(), rules.end(), rule);
  if (it == rules.end()) throw std::out_of_range("rule " + std::to_string(rule) + " not in sweep");
  return clusters[static_cast<std::size_t>(it - rules.begin())];
}

SweepReport sweep_eca(const SweepParams& params, const std::vector<unsigned>& rules) {
  SweepReport report;
  if (rules.empty()) {
    report.rules.resize(256);
    std::iota(report.rules.begin(), report.rules.end(), 0u);
  } else {
    report.rules = rules;
    std::vector<unsigned> check = rules;
    std::sort(check.begin(), check.end());
    if (std::adjacent_find(check.begin(), check.end()) != check.end())
      throw std::invalid_argument("sweep rules must be distinct");
    if (check.back() > 255) throw std::out_of_range("elementary rule numbers lie in [0, 255]");
  }

  const InputFamily family = gray_initials(params.n, params.width);
  CoefficientOptions inner = params.options;
  inner.workers = 1;  // parallelism is across rules

  report.entries.resize(report.rules.size());
  parallel_for(report.rules.size(), params.workers, [&](std::size_t i) {
    report.entries[i] = coefficient_C(RuleTable::elementary(report.rules[i]), family, params.t_max, inner);
  });

  std::vector<double> values;
  values.reserve(report.entries.size());
  for (const auto& e : report.entries) values.push_back(e.c_value);
  report.ranking = rank_rules(report.rules, values);
  if (params.cluster) report.clusters = kmeans_1d(values, 4);

  if (params.epsilon) {
    if (!(*params.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    report.epsilon = *params.epsilon;
  } else {
    std::vector<CoefficientResult> inert;
    for (unsigned r : kInertRules) {
      const auto it = std::find(report.rules.begin(), report.rules.end(), r);
      if (it != report.rules.end())
        inert.push_back(report.entries[static_cast<std::size_t>(it - report.rules.begin())]);
      else
        inert.push_back(coefficient_C(RuleTable::elementary(r), family, params.t_max, params.options));
    }
    report.epsilon = calibrate_zero_band(inert);
  }
  return report;
}

std::string ZeroBandGrouping::describe() const {
  if (shares_cluster && within_double_band) return "shared-cluster+within-2eps";
  if (shares_cluster) return "shared-cluster";
  if (within_double_band) return "within-2eps";
  return "neither";
}

ZeroBandGrouping zero_band_grouping(const SweepReport& report, unsigned rule) {
  ZeroBandGrouping g;
  g.within_double_band = std::fabs(report.entry(rule).c_value) < 2.0 * report.epsilon;
  if (!report.clusters.empty()) {
    const int label = report.cluster_of(rule);
    g.shares_cluster = label == report.cluster_of(0) || label == report.cluster_of(255);
  }
  return g;
}

}  // namespace ccoef
