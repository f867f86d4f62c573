#include "ccoef/engine.hpp"

#include <array>
#include <stdexcept>

namespace ccoef {
namespace {

// Elementary rules on packed rows: build the left- and right-neighbour rows by
// shifting the bit string one cell, then evaluate the rule as a sum of
// minterms over whole bytes.
Configuration step_elementary(const Configuration& config, const RuleTable& rule) {
  const auto src = config.storage();
  const std::size_t bytes = src.size();
  const std::size_t width = config.width();
  const Boundary& boundary = config.boundary();

  std::vector<std::uint8_t> left(bytes), right(bytes), out(bytes, 0);
  for (std::size_t b = 0; b < bytes; ++b) {
    left[b] = static_cast<std::uint8_t>((src[b] >> 1) | (b > 0 ? src[b - 1] << 7 : 0));
    right[b] = static_cast<std::uint8_t>((src[b] << 1) | (b + 1 < bytes ? src[b + 1] >> 7 : 0));
  }

  const bool cyclic = boundary.kind == BoundaryKind::cyclic;
  const std::uint8_t before_first = cyclic ? config[width - 1] : boundary.background;
  const std::uint8_t after_last = cyclic ? config[0] : boundary.background;
  if (before_first) left[0] |= 0x80u;
  const std::size_t last = width - 1;
  const auto last_mask = static_cast<std::uint8_t>(0x80u >> (last & 7));
  if (after_last)
    right[last >> 3] |= last_mask;
  else
    right[last >> 3] &= static_cast<std::uint8_t>(~last_mask);

  for (unsigned pattern = 0; pattern < 8; ++pattern) {
    if (!rule.at(pattern)) continue;
    for (std::size_t b = 0; b < bytes; ++b) {
      const std::uint8_t l = (pattern & 4) ? left[b] : static_cast<std::uint8_t>(~left[b]);
      const std::uint8_t c = (pattern & 2) ? src[b] : static_cast<std::uint8_t>(~src[b]);
      const std::uint8_t r = (pattern & 1) ? right[b] : static_cast<std::uint8_t>(~right[b]);
      out[b] |= static_cast<std::uint8_t>(l & c & r);
    }
  }
  if (const std::size_t tail = width % 8; tail != 0) out.back() &= static_cast<std::uint8_t>(0xFFu << (8 - tail));
  return Configuration::from_storage(width, 2, boundary, std::move(out));
}

Configuration step_general(const Configuration& config, const RuleTable& rule) {
  const std::size_t width = config.width();
  const auto k = static_cast<std::size_t>(rule.colours());
  const auto radius = static_cast<std::ptrdiff_t>(rule.radius());
  const auto w = static_cast<std::ptrdiff_t>(width);
  const bool cyclic = config.boundary().kind == BoundaryKind::cyclic;

  auto cell = [&](std::ptrdiff_t i) -> std::size_t {
    if (i >= 0 && i < w) return config[static_cast<std::size_t>(i)];
    if (!cyclic) return config.boundary().background;
    return config[static_cast<std::size_t>(((i % w) + w) % w)];
  };

  std::vector<std::uint8_t> cells(width);
  for (std::ptrdiff_t i = 0; i < w; ++i) {
    std::size_t index = 0;
    for (std::ptrdiff_t o = -radius; o <= radius; ++o) index = index * k + cell(i + o);
    cells[static_cast<std::size_t>(i)] = rule.at(index);
  }
  return Configuration::from_cells(cells, rule.colours(), config.boundary());
}

}  // namespace

Configuration step(const Configuration& config, const RuleTable& rule) {
  if (config.colours() != rule.colours())
    throw std::domain_error("configuration has " + std::to_string(config.colours()) + " colours but rule expects " +
                            std::to_string(rule.colours()));
  if (rule.is_elementary()) return step_elementary(config, rule);
  return step_general(config, rule);
}

Evolution evolve(const RuleTable& rule, const Configuration& init, std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("an evolution needs at least one transition (t >= 1)");
  std::vector<Configuration> rows;
  rows.reserve(steps + 1);
  rows.push_back(init);
  for (std::size_t s = 0; s < steps; ++s) rows.push_back(step(rows.back(), rule));
  return Evolution(rule.id(), std::move(rows));
}

bool replays(const Evolution& evolution, const RuleTable& rule) {
  const auto& rows = evolution.rows();
  for (std::size_t s = 0; s + 1 < rows.size(); ++s)
    if (step(rows[s], rule) != rows[s + 1]) return false;
  return true;
}

}  // namespace ccoef
