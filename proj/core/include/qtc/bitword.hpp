#ifndef QTC_BITWORD_HPP
#define QTC_BITWORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qtc {

// A finite binary word.  Bit 0 is read first and is the least
// significant bit, so value("011") = 6 and value("1") = 1.
class BitWord {
 public:
  BitWord() = default;

  explicit BitWord(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

  // The word of given length whose value is v; requires v < 2^length.
  static BitWord from_value(uint64_t v, size_t length);

  // The minimal-length word of v: empty for 0, otherwise no leading
  // (most significant) zero.
  static BitWord minimal(uint64_t v);

  uint64_t value() const;

  size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  uint8_t bit(size_t i) const { return bits_[i]; }

  void push_back(uint8_t b) { bits_.push_back(b); }

  // Concatenation: *this read first, then other.
  BitWord concat(const BitWord& other) const;

  // Bits in reading order, e.g. "101".
  std::string to_string() const;

  bool operator==(const BitWord&) const = default;

 private:
  std::vector<uint8_t> bits_;
};

}  // namespace qtc

#endif
