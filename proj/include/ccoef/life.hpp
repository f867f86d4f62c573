#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccoef {

/// Binary H x W grid on a torus.
class LifeGrid {
 public:
  LifeGrid(std::size_t height, std::size_t width);

  /// Rows of '0'/'1' (or '.'/'*'), all the same length.
  static LifeGrid from_rows(const std::vector<std::string_view>& rows);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }

  std::uint8_t operator()(std::size_t y, std::size_t x) const noexcept { return cells_[y * width_ + x]; }
  std::uint8_t at(std::size_t y, std::size_t x) const;
  void set(std::size_t y, std::size_t x, std::uint8_t alive);

  std::size_t population() const;
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  friend bool operator==(const LifeGrid&, const LifeGrid&) = default;

 private:
  std::size_t height_;
  std::size_t width_;
  std::vector<std::uint8_t> cells_;
};

/// Outer-totalistic two-state rule on the Moore neighbourhood: bit c of
/// `birth` (`survival`) set means a dead (live) cell with c live neighbours is
/// alive next step.
struct LifeRule {
  std::uint16_t birth = 0;
  std::uint16_t survival = 0;

  static constexpr LifeRule conway() noexcept { return {1u << 3, (1u << 2) | (1u << 3)}; }
  /// Parses "B3/S23" (case-insensitive, digits 0-8).
  static LifeRule parse(std::string_view notation);

  /// "life:B3/S23".
  std::string id() const;

  friend bool operator==(const LifeRule&, const LifeRule&) = default;
};

/// Outer-totalistic counterparts of the inert elementary rules 0, 255, 204
/// and 51 (all dead, all alive, identity, negation).
std::vector<LifeRule> inert_life_rules();

LifeGrid life_step(const LifeGrid& grid, const LifeRule& rule = LifeRule::conway());

/// Frame 0 is the input; `steps` >= 1 transitions follow.
std::vector<LifeGrid> evolve_life(const LifeGrid& init, std::size_t steps, const LifeRule& rule = LifeRule::conway());

}  // namespace ccoef
