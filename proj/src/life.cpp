#include "ccoef/life.hpp"

#include <stdexcept>

namespace ccoef {

LifeGrid::LifeGrid(std::size_t height, std::size_t width) : height_(height), width_(width) {
  if (height == 0 || width == 0) throw std::invalid_argument("life grid needs height and width >= 1");
  cells_.assign(height * width, 0);
}

LifeGrid LifeGrid::from_rows(const std::vector<std::string_view>& rows) {
  if (rows.empty()) throw std::invalid_argument("life grid needs at least one row");
  LifeGrid grid(rows.size(), rows.front().size());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y].size() != grid.width_) throw std::invalid_argument("life grid rows must have equal length");
    for (std::size_t x = 0; x < grid.width_; ++x) {
      const char ch = rows[y][x];
      if (ch == '1' || ch == '*')
        grid.cells_[y * grid.width_ + x] = 1;
      else if (ch != '0' && ch != '.')
        throw std::invalid_argument("life grid cells must be 0/1 or ./*");
    }
  }
  return grid;
}

std::uint8_t LifeGrid::at(std::size_t y, std::size_t x) const {
  if (y >= height_ || x >= width_) throw std::out_of_range("life grid index out of range");
  return cells_[y * width_ + x];
}

void LifeGrid::set(std::size_t y, std::size_t x, std::uint8_t alive) {
  if (y >= height_ || x >= width_) throw std::out_of_range("life grid index out of range");
  if (alive > 1) throw std::domain_error("life cells are 0 or 1");
  cells_[y * width_ + x] = alive;
}

std::size_t LifeGrid::population() const {
  std::size_t n = 0;
  for (auto c : cells_) n += c;
  return n;
}

LifeRule LifeRule::parse(std::string_view notation) {
  LifeRule rule;
  std::uint16_t* target = nullptr;
  bool saw_birth = false, saw_survival = false;
  for (char ch : notation) {
    if (ch == 'B' || ch == 'b') {
      target = &rule.birth;
      saw_birth = true;
    } else if (ch == 'S' || ch == 's') {
      target = &rule.survival;
      saw_survival = true;
    } else if (ch == '/') {
      target = nullptr;
    } else if (ch >= '0' && ch <= '8' && target != nullptr) {
      *target = static_cast<std::uint16_t>(*target | (1u << (ch - '0')));
    } else {
      throw std::invalid_argument("bad life rule notation: " + std::string(notation));
    }
  }
  if (!saw_birth || !saw_survival) throw std::invalid_argument("life rule needs B and S parts: " + std::string(notation));
  return rule;
}

std::string LifeRule::id() const {
  std::string out = "life:B";
  for (int c = 0; c <= 8; ++c)
    if (birth & (1u << c)) out += static_cast<char>('0' + c);
  out += "/S";
  for (int c = 0; c <= 8; ++c)
    if (survival & (1u << c)) out += static_cast<char>('0' + c);
  return out;
}

std::vector<LifeRule> inert_life_rules() {
  constexpr std::uint16_t all = 0x1FF;
  return {{0, 0}, {all, all}, {0, all}, {all, 0}};
}

LifeGrid life_step(const LifeGrid& grid, const LifeRule& rule) {
  const std::size_t h = grid.height(), w = grid.width();
  LifeGrid next(h, w);
  for (std::size_t y = 0; y < h; ++y) {
    const std::size_t up = (y + h - 1) % h, down = (y + 1) % h;
    for (std::size_t x = 0; x < w; ++x) {
      const std::size_t left = (x + w - 1) % w, right = (x + 1) % w;
      const unsigned neighbours = grid(up, left) + grid(up, x) + grid(up, right) + grid(y, left) + grid(y, right) +
                                  grid(down, left) + grid(down, x) + grid(down, right);
      const std::uint16_t mask = grid(y, x) ? rule.survival : rule.birth;
      const bool alive = (mask >> neighbours) & 1u;
      if (alive) next.set(y, x, 1);
    }
  }
  return next;
}

std::vector<LifeGrid> evolve_life(const LifeGrid& init, std::size_t steps, const LifeRule& rule) {
  if (steps == 0) throw std::invalid_argument("an evolution needs at least one transition (t >= 1)");
  std::vector<LifeGrid> frames;
  frames.reserve(steps + 1);
  frames.push_back(init);
  for (std::size_t s = 0; s < steps; ++s) frames.push_back(life_step(frames.back(), rule));
  return frames;
}

}  // namespace ccoef
