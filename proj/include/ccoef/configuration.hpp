#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccoef {

enum class BoundaryKind { cyclic, fixed };

/// How cells beyond either end of a row are read. Fixed boundaries read a
/// constant background colour.
struct Boundary {
  BoundaryKind kind = BoundaryKind::cyclic;
  std::uint8_t background = 0;

  static Boundary cyclic() noexcept { return {}; }
  static Boundary fixed(std::uint8_t background = 0) noexcept { return {BoundaryKind::fixed, background}; }

  std::string describe() const;

  friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// One row of cells.
///
/// Two-colour rows are bit-packed, eight cells per byte with the first cell in
/// the most significant bit; trailing pad bits are always zero. Rows with more
/// colours store one byte per cell.
class Configuration {
 public:
  explicit Configuration(std::size_t width, int colours = 2, Boundary boundary = {});

  static Configuration from_cells(std::span<const std::uint8_t> cells, int colours = 2,
                                  Boundary boundary = {});
  /// Adopts storage in the layout described above; pad bits must be zero.
  static Configuration from_storage(std::size_t width, int colours, Boundary boundary,
                                    std::vector<std::uint8_t> storage);
  /// Digits '0'..'9' only, one per cell.
  static Configuration from_string(std::string_view cells, int colours = 2, Boundary boundary = {});

  std::size_t width() const noexcept { return width_; }
  int colours() const noexcept { return colours_; }
  const Boundary& boundary() const noexcept { return boundary_; }
  bool packed() const noexcept { return colours_ == 2; }

  std::uint8_t operator[](std::size_t i) const noexcept {
    if (packed()) return static_cast<std::uint8_t>((data_[i >> 3] >> (7 - (i & 7))) & 1u);
    return data_[i];
  }
  std::uint8_t at(std::size_t i) const;
  void set(std::size_t i, std::uint8_t colour);

  std::size_t count(std::uint8_t colour) const;
  std::vector<std::uint8_t> cells() const;
  std::string to_string() const;

  /// Underlying storage: packed bytes for two colours, one byte per cell otherwise.
  std::span<const std::uint8_t> storage() const noexcept { return data_; }

  Configuration complement() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t width_;
  int colours_;
  Boundary boundary_;
  std::vector<std::uint8_t> data_;
};

std::size_t hamming_distance(const Configuration& a, const Configuration& b);

/// Space-time array: row 0 is the input, row s+1 is the successor of row s.
class Evolution {
 public:
  Evolution(std::string rule_id, std::vector<Configuration> rows);

  const std::string& rule_id() const noexcept { return rule_id_; }
  const std::vector<Configuration>& rows() const noexcept { return rows_; }
  const Configuration& row(std::size_t s) const { return rows_.at(s); }
  /// Number of transitions; the evolution has steps() + 1 rows.
  std::size_t steps() const noexcept { return rows_.size() - 1; }
  std::size_t width() const noexcept { return rows_.front().width(); }
  int colours() const noexcept { return rows_.front().colours(); }
  const Boundary& boundary() const noexcept { return rows_.front().boundary(); }

  friend bool operator==(const Evolution&, const Evolution&) = default;

 private:
  std::string rule_id_;
  std::vector<Configuration> rows_;
};

}  // namespace ccoef
