#include "ccoef/configuration.hpp"

#include <bit>
#include <stdexcept>

namespace ccoef {
namespace {

std::size_t storage_size(std::size_t width, int colours) { return colours == 2 ? (width + 7) / 8 : width; }

void check_shape(std::size_t width, int colours, const Boundary& boundary) {
  if (width == 0) throw std::invalid_argument("configuration width must be at least 1");
  if (colours < 2 || colours > 256) throw std::invalid_argument("colour count must lie in [2, 256]");
  if (boundary.background >= colours) throw std::invalid_argument("background colour outside 0..k-1");
}

}  // namespace

std::string Boundary::describe() const {
  if (kind == BoundaryKind::cyclic) return "cyclic";
  return "fixed:" + std::to_string(background);
}

Configuration::Configuration(std::size_t width, int colours, Boundary boundary)
    : width_(width), colours_(colours), boundary_(boundary) {
  check_shape(width, colours, boundary);
  data_.assign(storage_size(width, colours), 0);
}

Configuration Configuration::from_cells(std::span<const std::uint8_t> cells, int colours, Boundary boundary) {
  Configuration c(cells.size(), colours, boundary);
  for (std::size_t i = 0; i < cells.size(); ++i) c.set(i, cells[i]);
  return c;
}

Configuration Configuration::from_storage(std::size_t width, int colours, Boundary boundary,
                                          std::vector<std::uint8_t> storage) {
  Configuration c(width, colours, boundary);
  if (storage.size() != c.data_.size()) throw std::invalid_argument("storage size does not match width");
  if (colours == 2) {
    const std::size_t tail = width % 8;
    if (tail != 0 && (storage.back() & (0xFFu >> tail)) != 0)
      throw std::invalid_argument("pad bits of packed storage must be zero");
  } else {
    for (auto v : storage)
      if (v >= colours) throw std::invalid_argument("cell colour outside 0..k-1");
  }
  c.data_ = std::move(storage);
  return c;
}

Configuration Configuration::from_string(std::string_view cells, int colours, Boundary boundary) {
  Configuration c(cells.size(), colours, boundary);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const char ch = cells[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("configuration string must contain digits only");
    c.set(i, static_cast<std::uint8_t>(ch - '0'));
  }
  return c;
}

std::uint8_t Configuration::at(std::size_t i) const {
  if (i >= width_) throw std::out_of_range("cell index beyond configuration width");
  return (*this)[i];
}

void Configuration::set(std::size_t i, std::uint8_t colour) {
  if (i >= width_) throw std::out_of_range("cell index beyond configuration width");
  if (colour >= colours_) throw std::domain_error("cell colour outside 0..k-1");
  if (packed()) {
    const auto mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
    if (colour)
      data_[i >> 3] |= mask;
    else
      data_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  } else {
    data_[i] = colour;
  }
}

std::size_t Configuration::count(std::uint8_t colour) const {
  if (packed()) {
    std::size_t ones = 0;
    for (auto b : data_) ones += static_cast<std::size_t>(std::popcount(b));
    return colour == 1 ? ones : (colour == 0 ? width_ - ones : 0);
  }
  std::size_t n = 0;
  for (auto v : data_) n += (v == colour);
  return n;
}

std::vector<std::uint8_t> Configuration::cells() const {
  std::vector<std::uint8_t> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = (*this)[i];
  return out;
}

std::string Configuration::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) out[i] = static_cast<char>('0' + (*this)[i]);
  return out;
}

Configuration Configuration::complement() const {
  Configuration c(width_, colours_, boundary_);
  if (packed()) {
    for (std::size_t b = 0; b < data_.size(); ++b) c.data_[b] = static_cast<std::uint8_t>(~data_[b]);
    if (const std::size_t tail = width_ % 8; tail != 0)
      c.data_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - tail));
  } else {
    for (std::size_t i = 0; i < width_; ++i) c.data_[i] = static_cast<std::uint8_t>(colours_ - 1 - data_[i]);
  }
  return c;
}

std::size_t hamming_distance(const Configuration& a, const Configuration& b) {
  if (a.width() != b.width()) throw std::invalid_argument("hamming distance needs equal widths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.width(); ++i) d += (a[i] != b[i]);
  return d;
}

Evolution::Evolution(std::string rule_id, std::vector<Configuration> rows)
    : rule_id_(std::move(rule_id)), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("evolution needs at least one row");
  const auto& first = rows_.front();
  for (const auto& r : rows_) {
    if (r.width() != first.width() || r.colours() != first.colours() || r.boundary() != first.boundary())
      throw std::invalid_argument("all rows of an evolution must share width, colours and boundary");
  }
}

}  // namespace ccoef
