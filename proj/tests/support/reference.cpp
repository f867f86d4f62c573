#include "reference.hpp"

#include <algorithm>
#include <cstdlib>

#include "ccoef/complexity.hpp"

namespace ccoef::reference {

Rule decode(std::uint64_t number, int k, int r) {
  Rule rule{k, r, {}};
  std::size_t size = 1;
  for (int i = 0; i < 2 * r + 1; ++i) size *= static_cast<std::size_t>(k);
  for (std::size_t d = 0; d < size; ++d) {
    rule.out.push_back(static_cast<std::uint8_t>(number % static_cast<std::uint64_t>(k)));
    number /= static_cast<std::uint64_t>(k);
  }
  return rule;
}

Diagram run(const Rule& rule, const Row& init, std::size_t steps) {
  Diagram rows{init};
  const std::size_t w = init.size();
  for (std::size_t s = 0; s < steps; ++s) {
    const Row& prev = rows.back();
    Row next(w);
    for (std::size_t i = 0; i < w; ++i) {
      std::size_t value = 0;
      for (int o = -rule.r; o <= rule.r; ++o) {
        const std::size_t j = (i + w * static_cast<std::size_t>(rule.r) + static_cast<std::size_t>(o)) % w;
        value = value * static_cast<std::size_t>(rule.k) + prev[j];
      }
      next[i] = rule.out[value];
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

std::vector<std::uint8_t> pack(const Diagram& rows) {
  bool binary = true;
  for (const auto& row : rows)
    for (auto c : row) binary = binary && c < 2;
  std::vector<std::uint8_t> out;
  if (!binary) {
    for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
  }
  std::size_t bit = 0;
  for (const auto& row : rows)
    for (auto c : row) {
      if (bit % 8 == 0) out.push_back(0);
      if (c) out.back() |= static_cast<std::uint8_t>(1u << (7 - bit % 8));
      ++bit;
    }
  return out;
}

std::vector<Row> gray_rows(std::size_t n, std::size_t width) {
  std::size_t w = 1;
  while ((std::size_t{1} << w) < n) ++w;
  std::vector<Row> rows;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t g = j ^ (j >> 1);
    Row row(width, 0);
    const std::size_t offset = (width - w) / 2;
    for (std::size_t b = 0; b < w; ++b) row[offset + b] = (g >> (w - 1 - b)) & 1;
    rows.push_back(row);
  }
  return rows;
}

double difference_sum(const Rule& rule, const std::vector<Row>& inputs, std::size_t t) {
  std::vector<long long> sizes;
  for (const auto& input : inputs) sizes.push_back(static_cast<long long>(compressed_size(pack(run(rule, input, t)))));
  long long total = 0;
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) total += std::llabs(sizes[j] - sizes[j + 1]);
  return static_cast<double>(total) / (static_cast<double>(t) * static_cast<double>(inputs.size() - 1));
}

Line least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

double coefficient(const Rule& rule, const std::vector<Row>& inputs, std::size_t t_max) {
  const std::size_t t_min = std::max<std::size_t>(4, t_max / 8);
  const std::size_t stride = std::max<std::size_t>(1, (t_max - t_min) / 15);
  std::vector<double> xs, ys;
  for (std::size_t t = t_min; t <= t_max; t += stride) {
    xs.push_back(static_cast<double>(t));
    ys.push_back(difference_sum(rule, inputs, t));
  }
  return least_squares(xs, ys).slope;
}

}  // namespace ccoef::reference
