#include "ccoef/rule_table.hpp"

#include <sstream>
#include <stdexcept>

namespace ccoef {
namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

std::size_t table_size(int colours, int radius) {
  if (colours < 2 || colours > 256) throw std::invalid_argument("colour count must lie in [2, 256]");
  if (radius < 1) throw std::invalid_argument("radius must be at least 1");
  std::size_t size = 1;
  for (int i = 0; i < 2 * radius + 1; ++i) {
    size *= static_cast<std::size_t>(colours);
    if (size > kMaxTableSize) throw std::invalid_argument("rule table too large");
  }
  return size;
}

}  // namespace

RuleTable::RuleTable(int colours, int radius, std::vector<std::uint8_t> table)
    : colours_(colours), radius_(radius), table_(std::move(table)) {
  if (table_.size() != table_size(colours, radius))
    throw std::invalid_argument("rule table must have k^(2r+1) entries");
  for (auto v : table_)
    if (v >= colours_) throw std::invalid_argument("rule output outside 0..k-1");
}

RuleTable RuleTable::from_number(const RuleNumber& number, int colours, int radius) {
  const std::size_t size = table_size(colours, radius);
  const RuleNumber base = colours;
  const RuleNumber limit = boost::multiprecision::pow(base, static_cast<unsigned>(size));
  if (number < 0 || number >= limit) {
    std::ostringstream msg;
    msg << "rule number " << number << " outside the valid interval [0, " << limit << ") for k=" << colours
        << ", r=" << radius;
    throw std::out_of_range(msg.str());
  }
  std::vector<std::uint8_t> table(size);
  RuleNumber rest = number;
  for (std::size_t d = 0; d < size; ++d) {
    table[d] = static_cast<std::uint8_t>(static_cast<unsigned>(rest % base));
    rest /= base;
  }
  return RuleTable(colours, radius, std::move(table));
}

RuleTable RuleTable::elementary(unsigned number) { return from_number(number, 2, 1); }

RuleNumber RuleTable::number() const {
  RuleNumber n = 0;
  for (auto it = table_.rbegin(); it != table_.rend(); ++it) n = n * colours_ + *it;
  return n;
}

std::uint8_t RuleTable::operator()(std::span<const std::uint8_t> neighbourhood) const {
  if (neighbourhood.size() != neighbourhood_size()) throw std::invalid_argument("neighbourhood length must be 2r+1");
  std::size_t index = 0;
  for (auto c : neighbourhood) {
    if (c >= colours_) throw std::domain_error("neighbourhood colour outside 0..k-1");
    index = index * static_cast<std::size_t>(colours_) + c;
  }
  return table_[index];
}

std::string RuleTable::id() const {
  std::ostringstream out;
  if (is_elementary())
    out << "eca:" << number();
  else
    out << "ca:k" << colours_ << ":r" << radius_ << ":" << number();
  return out.str();
}

RuleTable RuleTable::complement() const {
  // index -> digits -> conjugated digits -> index
  const std::size_t k = static_cast<std::size_t>(colours_);
  std::vector<std::uint8_t> out(table_.size());
  for (std::size_t index = 0; index < table_.size(); ++index) {
    std::size_t rest = index, conj = 0, scale = 1;
    for (std::size_t p = 0; p < neighbourhood_size(); ++p) {
      conj += (k - 1 - rest % k) * scale;
      rest /= k;
      scale *= k;
    }
    out[index] = static_cast<std::uint8_t>(k - 1 - table_[conj]);
  }
  return RuleTable(colours_, radius_, std::move(out));
}

RuleTable RuleTable::mirror() const {
  const std::size_t k = static_cast<std::size_t>(colours_);
  std::vector<std::uint8_t> out(table_.size());
  for (std::size_t index = 0; index < table_.size(); ++index) {
    std::size_t rest = index, reflected = 0;
    for (std::size_t p = 0; p < neighbourhood_size(); ++p) {
      reflected = reflected * k + rest % k;
      rest /= k;
    }
    out[index] = table_[reflected];
  }
  return RuleTable(colours_, radius_, std::move(out));
}

}  // namespace ccoef
