#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ccoef/configuration.hpp"
#include "ccoef/life.hpp"

namespace ccoef {

enum class FamilyScheme { gray, random };

std::string to_string(FamilyScheme scheme);

/// Ordered initial configurations i_0 .. i_{n-1}, all of one width.
struct InputFamily {
  std::vector<Configuration> members;
  FamilyScheme scheme = FamilyScheme::gray;
  std::uint64_t seed = 0;
  double density = 0.0;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t width() const noexcept { return members.empty() ? 0 : members.front().width(); }
  /// "gray" or "random(seed=7,density=0.5)".
  std::string descriptor() const;
};

/// Same idea for Game of Life inputs.
struct LifeFamily {
  std::vector<LifeGrid> members;
  FamilyScheme scheme = FamilyScheme::gray;

  std::size_t size() const noexcept { return members.size(); }
  std::size_t height() const noexcept { return members.empty() ? 0 : members.front().height(); }
  std::size_t width() const noexcept { return members.empty() ? 0 : members.front().width(); }
  std::string descriptor() const;
};

constexpr std::uint64_t gray_code(std::uint64_t j) noexcept { return j ^ (j >> 1); }

/// Number of binary digits needed for `value` (at least 1).
std::size_t bit_width_of(std::uint64_t value) noexcept;

/// Member j is the reflected Gray code of j written MSB-first in
/// w = bit_width_of(n-1) cells, centred in a zero row of `width` cells (an odd
/// leftover cell goes to the right). Colour 1 marks set bits for any k.
InputFamily gray_initials(std::size_t n, std::size_t width, int colours = 2, Boundary boundary = {});

/// Each cell is 1 with probability `density`, drawn from std::mt19937_64
/// seeded with `seed`: a cell is set when the top 53 bits of the next draw,
/// read as a fraction in [0, 1), fall below `density`. Duplicate rows are
/// redrawn so members stay distinct.
InputFamily random_initials(std::size_t n, std::size_t width, std::uint64_t seed, double density = 0.5,
                            int colours = 2, Boundary boundary = {});

/// The Gray pattern of member j written row-major into an s x s patch,
/// s = ceil(sqrt(w)), centred in an otherwise empty height x width torus.
LifeFamily gray_patches(std::size_t n, std::size_t height, std::size_t width);

}  // namespace ccoef
