#ifndef QTC_PROFILE_HPP
#define QTC_PROFILE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qtc/oracle.hpp"

namespace qtc {

// Membership indicator over a in [0, 2^n): which low-bit extensions of
// a suffix land in the language.
class Profile {
 public:
  Profile() = default;
  explicit Profile(size_t n);

  size_t order() const { return n_; }
  uint64_t width() const { return uint64_t(1) << n_; }

  bool test(uint64_t a) const {
    return (words_[a >> 6] >> (a & 63)) & 1;
  }
  void set(uint64_t a, bool v);

  size_t popcount() const;

  // Ascending members.
  std::vector<uint64_t> members() const;

  // True iff every member is contained in the ascending list s.
  bool subset_of(const std::vector<uint64_t>& s) const;

  // Hex encoding of the member words, low word first.
  std::string to_hex() const;

  const std::vector<uint64_t>& words() const { return words_; }

  auto operator<=>(const Profile&) const = default;

 private:
  size_t n_ = 0;
  std::vector<uint64_t> words_;
};

// The profile of order n at suffix integer y: bit a is membership of
// y*2^n + a.  For automaton oracles the suffix word is the minimal
// binary word of y and bit a is acceptance of word(a, n) . word(y).
Profile profile(const LanguageOracle& oracle, size_t n, uint64_t y);

}  // namespace qtc

#endif
