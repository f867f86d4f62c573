#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ccoef {

/// Arbitrary-precision rule number. k^(k^(2r+1)) overflows 64 bits already for
/// k = 2, r = 3, so the codec works on big integers throughout.
using RuleNumber = boost::multiprecision::cpp_int;

/// Local update map of a one-dimensional cellular automaton with `k` colours
/// and radius `r`.
///
/// Entries are indexed by the base-k value of the neighbourhood read left to
/// right, so for elementary rules index 7 is the neighbourhood 111 and index 0
/// is 000. The Wolfram number is the base-k number whose digit d is the output
/// for neighbourhood d.
class RuleTable {
 public:
  RuleTable(int colours, int radius, std::vector<std::uint8_t> table);

  /// Throws std::out_of_range when `number` is outside [0, k^(k^(2r+1))).
  static RuleTable from_number(const RuleNumber& number, int colours = 2, int radius = 1);
  static RuleTable elementary(unsigned number);

  RuleNumber number() const;

  int colours() const noexcept { return colours_; }
  int radius() const noexcept { return radius_; }
  std::size_t neighbourhood_size() const noexcept { return 2 * static_cast<std::size_t>(radius_) + 1; }
  std::size_t size() const noexcept { return table_.size(); }
  bool is_elementary() const noexcept { return colours_ == 2 && radius_ == 1; }

  std::uint8_t at(std::size_t index) const { return table_.at(index); }
  std::uint8_t operator()(std::span<const std::uint8_t> neighbourhood) const;
  std::span<const std::uint8_t> entries() const noexcept { return table_; }

  /// "eca:110" for elementary rules, "ca:k3:r1:<number>" otherwise.
  std::string id() const;

  /// Colour conjugation c -> k-1-c applied to inputs and output.
  RuleTable complement() const;
  /// Left-right reflection of the neighbourhood.
  RuleTable mirror() const;

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  int colours_;
  int radius_;
  std::vector<std::uint8_t> table_;
};

}  // namespace ccoef
