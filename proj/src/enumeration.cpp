#include "ccoef/enumeration.hpp"

#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ccoef {

std::string to_string(FamilyScheme scheme) { return scheme == FamilyScheme::gray ? "gray" : "random"; }

std::string InputFamily::descriptor() const {
  if (scheme == FamilyScheme::gray) return "gray";
  std::ostringstream out;
  out << "random(seed=" << seed << ",density=" << density << ")";
  return out.str();
}

std::string LifeFamily::descriptor() const { return "gray-patch"; }

std::size_t bit_width_of(std::uint64_t value) noexcept {
  return value == 0 ? 1 : static_cast<std::size_t>(std::bit_width(value));
}

InputFamily gray_initials(std::size_t n, std::size_t width, int colours, Boundary boundary) {
  if (n < 2) throw std::invalid_argument("a Gray family needs n >= 2 members");
  const std::size_t w = bit_width_of(n - 1);
  if (width < w)
    throw std::invalid_argument("width " + std::to_string(width) + " cannot hold " + std::to_string(w) +
                                "-bit Gray patterns");
  const std::size_t offset = (width - w) / 2;

  InputFamily family;
  family.scheme = FamilyScheme::gray;
  family.members.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t g = gray_code(j);
    Configuration c(width, colours, boundary);
    for (std::size_t b = 0; b < w; ++b)
      if ((g >> (w - 1 - b)) & 1u) c.set(offset + b, 1);
    family.members.push_back(std::move(c));
  }
  return family;
}

InputFamily random_initials(std::size_t n, std::size_t width, std::uint64_t seed, double density, int colours,
                            Boundary boundary) {
  if (n < 1) throw std::invalid_argument("a random family needs n >= 1 members");
  if (!(density > 0.0 && density < 1.0)) throw std::invalid_argument("density must lie strictly between 0 and 1");
  if (width == 0) throw std::invalid_argument("configuration width must be at least 1");
  if (width < 64 && n > (std::uint64_t{1} << width))
    throw std::invalid_argument("not enough distinct rows of this width for n members");

  std::mt19937_64 gen(seed);
  auto draw = [&] {
    Configuration c(width, colours, boundary);
    for (std::size_t i = 0; i < width; ++i) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      if (u < density) c.set(i, 1);
    }
    return c;
  };

  InputFamily family;
  family.scheme = FamilyScheme::random;
  family.seed = seed;
  family.density = density;
  std::set<std::vector<std::uint8_t>> seen;
  while (family.members.size() < n) {
    Configuration c = draw();
    auto key = std::vector<std::uint8_t>(c.storage().begin(), c.storage().end());
    if (seen.insert(std::move(key)).second) family.members.push_back(std::move(c));
  }
  return family;
}

LifeFamily gray_patches(std::size_t n, std::size_t height, std::size_t width) {
  if (n < 2) throw std::invalid_argument("a Gray family needs n >= 2 members");
  const std::size_t w = bit_width_of(n - 1);
  std::size_t side = 1;
  while (side * side < w) ++side;
  if (height < side || width < side) throw std::invalid_argument("grid too small for the Gray patch");
  const std::size_t top = (height - side) / 2, left = (width - side) / 2;

  LifeFamily family;
  family.members.reserve(n);
  for (std::uint64_t j = 0; j < n; ++j) {
    const std::uint64_t g = gray_code(j);
    LifeGrid grid(height, width);
    for (std::size_t b = 0; b < w; ++b)
      if ((g >> (w - 1 - b)) & 1u) grid.set(top + b / side, left + b % side, 1);
    family.members.push_back(std::move(grid));
  }
  return family;
}

}  // namespace ccoef
