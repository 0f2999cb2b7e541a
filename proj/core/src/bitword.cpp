#include "qtc/bitword.hpp"

#include <stdexcept>

namespace qtc {

BitWord BitWord::from_value(uint64_t v, size_t length) {
  if (length < 64 && (v >> length) != 0)
    throw std::invalid_argument("BitWord::from_value: value does not fit length");
  std::vector<uint8_t> bits(length);
  for (size_t i = 0; i < length; ++i) bits[i] = (v >> i) & 1;
  return BitWord(std::move(bits));
}

BitWord BitWord::minimal(uint64_t v) {
  std::vector<uint8_t> bits;
  while (v != 0) {
    bits.push_back(v & 1);
    v >>= 1;
  }
  return BitWord(std::move(bits));
}

uint64_t BitWord::value() const {
  uint64_t v = 0;
  for (size_t i = 0; i < bits_.size() && i < 64; ++i)
    v |= uint64_t(bits_[i]) << i;
  return v;
}

BitWord BitWord::concat(const BitWord& other) const {
  std::vector<uint8_t> bits;
  bits.reserve(bits_.size() + other.bits_.size());
  bits.insert(bits.end(), bits_.begin(), bits_.end());
  for (size_t i = 0; i < other.length(); ++i) bits.push_back(other.bit(i));
  return BitWord(std::move(bits));
}

std::string BitWord::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace qtc
