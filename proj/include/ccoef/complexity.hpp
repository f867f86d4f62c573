#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccoef/configuration.hpp"
#include "ccoef/life.hpp"
#include "ccoef/rule_table.hpp"

namespace ccoef {

/// Compressed size of a serialized evolution, in bits.
struct ComplexityValue {
  std::uint64_t bits = 0;
  std::uint64_t raw_bits = 0;
  std::string compressor_id;
};

/// Row-major payload with no header. Two-colour cells are packed eight per
/// byte, MSB first, continuing across row boundaries; only the final byte is
/// zero-padded. Other colour counts use one byte per cell.
std::vector<std::uint8_t> serialize(const Evolution& evolution, bool include_input_row = true);

struct EvolutionShape {
  std::size_t rows = 0;
  std::size_t width = 0;
  int colours = 2;
  Boundary boundary{};
  std::string rule_id;
};

/// Inverse of serialize(evolution, true). Throws std::invalid_argument when
/// the payload length does not match the shape.
Evolution deserialize(std::span<const std::uint8_t> payload, const EvolutionShape& shape);

/// Life frames serialized the same way, each frame row-major over the full grid.
std::vector<std::uint8_t> serialize(const std::vector<LifeGrid>& frames, bool include_input_row = true);

/// Continuous payload of a whole evolution from which the payload of any
/// leading run of rows can be cut without re-serializing.
class RowStream {
 public:
  RowStream(const Evolution& evolution, bool include_input_row);
  RowStream(const std::vector<LifeGrid>& frames, bool include_input_row);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cells_per_row() const noexcept { return cells_per_row_; }
  /// Payload of the first `rows` rows, identical to serializing them directly.
  std::vector<std::uint8_t> prefix(std::size_t rows) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cells_per_row_ = 0;
  bool packed_ = true;
  std::vector<std::uint8_t> bytes_;
};

/// Exact length in bits of a raw DEFLATE stream (zlib, level 9, 32 KiB window,
/// memLevel 9) for `payload`, terminated by an empty fixed-Huffman final block.
/// An empty payload costs exactly kEmptyStreamBits.
std::uint64_t compressed_size(std::span<const std::uint8_t> payload);

inline constexpr std::uint64_t kEmptyStreamBits = 10;

/// Identifies format, library version and parameters of compressed_size().
const std::string& compressor_id();

/// Upper bound on compressed_size(p) - 8 * p.size(): every block may fall back
/// to a stored block costing at most 42 bits of framing, and zlib at memLevel 9
/// closes a block after at most 32767 symbols.
std::uint64_t compressor_overhead_bits(std::size_t payload_bytes) noexcept;

/// Bits of information in the space-time array: rows * width * ceil(log2 k).
std::uint64_t raw_bits(std::size_t rows, std::size_t cells_per_row, int colours) noexcept;

ComplexityValue complexity(const Evolution& evolution, bool include_input_row = true);
ComplexityValue complexity(const std::vector<LifeGrid>& frames, bool include_input_row = true);

/// compressed_size(serialize(evolve(rule, init, steps))) with metadata.
ComplexityValue complexity_C(const RuleTable& rule, const Configuration& init, std::size_t steps,
                             bool include_input_row = true);

}  // namespace ccoef
