#include "ccoef/complexity.hpp"

#include <stdexcept>

#include <zlib.h>

#include "ccoef/engine.hpp"

namespace ccoef {
namespace {

// MSB-first bit appender.
class BitWriter {
 public:
  void reserve_bits(std::size_t bits) { bytes_.reserve((bits + 7) / 8); }
  void push(bool bit) {
    if (used_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (used_ % 8));
    ++used_;
  }
  /// Appends `count` bits taken MSB-first from packed storage.
  void append(std::span<const std::uint8_t> packed, std::size_t count) {
    if (used_ % 8 == 0) {
      // Byte-aligned: copy whole bytes, pad bits of the source are zero.
      const std::size_t whole = (count + 7) / 8;
      bytes_.insert(bytes_.end(), packed.begin(), packed.begin() + static_cast<std::ptrdiff_t>(whole));
      used_ += count;
      if (used_ % 8 != 0) bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - used_ % 8));
      return;
    }
    for (std::size_t i = 0; i < count; ++i) push((packed[i >> 3] >> (7 - (i & 7))) & 1u);
  }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t used_ = 0;
};

std::vector<std::uint8_t> pack_life_frames(const std::vector<LifeGrid>& frames, std::size_t first) {
  BitWriter out;
  if (frames.empty()) return {};
  const std::size_t cells = frames.front().height() * frames.front().width();
  out.reserve_bits((frames.size() - first) * cells);
  for (std::size_t f = first; f < frames.size(); ++f) {
    if (frames[f].cells().size() != cells) throw std::invalid_argument("life frames must share dimensions");
    for (auto c : frames[f].cells()) out.push(c != 0);
  }
  return out.take();
}

struct DeflateStream {
  z_stream zs{};
  DeflateStream() {
    if (deflateInit2(&zs, 9, Z_DEFLATED, -15, 9, Z_DEFAULT_STRATEGY) != Z_OK)
      throw std::runtime_error("deflateInit2 failed");
  }
  ~DeflateStream() { deflateEnd(&zs); }
  DeflateStream(const DeflateStream&) = delete;
  DeflateStream& operator=(const DeflateStream&) = delete;
};

}  // namespace

std::vector<std::uint8_t> serialize(const Evolution& evolution, bool include_input_row) {
  const std::size_t first = include_input_row ? 0 : 1;
  const auto& rows = evolution.rows();
  if (evolution.colours() != 2) {
    std::vector<std::uint8_t> out;
    out.reserve((rows.size() - first) * evolution.width());
    for (std::size_t s = first; s < rows.size(); ++s)
      out.insert(out.end(), rows[s].storage().begin(), rows[s].storage().end());
    return out;
  }
  BitWriter out;
  out.reserve_bits((rows.size() - first) * evolution.width());
  for (std::size_t s = first; s < rows.size(); ++s) out.append(rows[s].storage(), rows[s].width());
  return out.take();
}

std::vector<std::uint8_t> serialize(const std::vector<LifeGrid>& frames, bool include_input_row) {
  return pack_life_frames(frames, include_input_row ? 0 : 1);
}

Evolution deserialize(std::span<const std::uint8_t> payload, const EvolutionShape& shape) {
  if (shape.rows == 0 || shape.width == 0) throw std::invalid_argument("evolution shape needs rows and width >= 1");
  const std::size_t cells = shape.rows * shape.width;
  std::vector<Configuration> rows;
  rows.reserve(shape.rows);
  if (shape.colours == 2) {
    if (payload.size() != (cells + 7) / 8) throw std::invalid_argument("payload length does not match shape");
    if (cells % 8 != 0 && (payload.back() & (0xFFu >> (cells % 8))) != 0)
      throw std::invalid_argument("payload pad bits must be zero");
    for (std::size_t s = 0; s < shape.rows; ++s) {
      Configuration row(shape.width, 2, shape.boundary);
      for (std::size_t i = 0; i < shape.width; ++i) {
        const std::size_t bit = s * shape.width + i;
        if ((payload[bit >> 3] >> (7 - (bit & 7))) & 1u) row.set(i, 1);
      }
      rows.push_back(std::move(row));
    }
  } else {
    if (payload.size() != cells) throw std::invalid_argument("payload length does not match shape");
    for (std::size_t s = 0; s < shape.rows; ++s)
      rows.push_back(
          Configuration::from_cells(payload.subspan(s * shape.width, shape.width), shape.colours, shape.boundary));
  }
  return Evolution(shape.rule_id, std::move(rows));
}

RowStream::RowStream(const Evolution& evolution, bool include_input_row)
    : rows_(evolution.rows().size() - (include_input_row ? 0 : 1)),
      cells_per_row_(evolution.width()),
      packed_(evolution.colours() == 2),
      bytes_(serialize(evolution, include_input_row)) {}

RowStream::RowStream(const std::vector<LifeGrid>& frames, bool include_input_row)
    : rows_(frames.size() - (include_input_row ? 0 : 1)),
      cells_per_row_(frames.empty() ? 0 : frames.front().height() * frames.front().width()),
      packed_(true),
      bytes_(serialize(frames, include_input_row)) {}

std::vector<std::uint8_t> RowStream::prefix(std::size_t rows) const {
  if (rows > rows_) throw std::out_of_range("prefix longer than the stream");
  const std::size_t cells = rows * cells_per_row_;
  if (!packed_) return {bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>(cells)};
  std::vector<std::uint8_t> out(bytes_.begin(), bytes_.begin() + static_cast<std::ptrdiff_t>((cells + 7) / 8));
  if (cells % 8 != 0) out.back() &= static_cast<std::uint8_t>(0xFFu << (8 - cells % 8));
  return out;
}

std::uint64_t compressed_size(std::span<const std::uint8_t> payload) {
  if (payload.size() > 0xFFFFFFFFu) throw std::length_error("payload too large for a single deflate call");
  DeflateStream stream;
  z_stream& zs = stream.zs;
  std::vector<Bytef> out(deflateBound(&zs, static_cast<uLong>(payload.size())) + 64);
  zs.next_in = const_cast<Bytef*>(payload.data());
  zs.avail_in = static_cast<uInt>(payload.size());

  // Z_BLOCK closes the last block without byte-aligning, so the pending bit
  // count gives the exact stream length.
  std::uint64_t written = 0;
  for (;;) {
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = deflate(&zs, Z_BLOCK);
    if (rc != Z_OK && rc != Z_BUF_ERROR) throw std::runtime_error("deflate failed");
    written += out.size() - zs.avail_out;
    if (zs.avail_in == 0 && zs.avail_out != 0) break;
  }
  unsigned pending = 0;
  int bits = 0;
  if (deflatePending(&zs, &pending, &bits) != Z_OK) throw std::runtime_error("deflatePending failed");
  return (written + pending) * 8 + static_cast<std::uint64_t>(bits) + kEmptyStreamBits;
}

const std::string& compressor_id() {
  static const std::string id = std::string("deflate-raw/zlib-") + zlibVersion() + "/level9/wbits15/mem9/bits";
  return id;
}

std::uint64_t compressor_overhead_bits(std::size_t payload_bytes) noexcept {
  constexpr std::size_t kSymbolsPerBlock = 32767;
  const std::size_t blocks = payload_bytes == 0 ? 1 : (payload_bytes + kSymbolsPerBlock - 1) / kSymbolsPerBlock;
  return 42 * static_cast<std::uint64_t>(blocks) + kEmptyStreamBits;
}

std::uint64_t raw_bits(std::size_t rows, std::size_t cells_per_row, int colours) noexcept {
  std::uint64_t bits_per_cell = 0;
  while ((std::uint64_t{1} << bits_per_cell) < static_cast<std::uint64_t>(colours)) ++bits_per_cell;
  return static_cast<std::uint64_t>(rows) * cells_per_row * bits_per_cell;
}

ComplexityValue complexity(const Evolution& evolution, bool include_input_row) {
  const auto payload = serialize(evolution, include_input_row);
  const std::size_t rows = evolution.rows().size() - (include_input_row ? 0 : 1);
  return {compressed_size(payload), raw_bits(rows, evolution.width(), evolution.colours()), compressor_id()};
}

ComplexityValue complexity(const std::vector<LifeGrid>& frames, bool include_input_row) {
  if (frames.empty()) throw std::invalid_argument("no frames");
  const auto payload = serialize(frames, include_input_row);
  const std::size_t rows = frames.size() - (include_input_row ? 0 : 1);
  return {compressed_size(payload), raw_bits(rows, frames.front().height() * frames.front().width(), 2),
          compressor_id()};
}

ComplexityValue complexity_C(const RuleTable& rule, const Configuration& init, std::size_t steps,
                             bool include_input_row) {
  return complexity(evolve(rule, init, steps), include_input_row);
}

}  // namespace ccoef
