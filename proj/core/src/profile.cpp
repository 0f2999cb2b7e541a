#include "qtc/profile.hpp"

#include <algorithm>
#include <bit>

#include "qtc/errors.hpp"

namespace qtc {

Profile::Profile(size_t n) : n_(n) {
  if (n > 30) throw BudgetError("profile order too large");
  words_.assign((width() + 63) / 64, 0);
}

void Profile::set(uint64_t a, bool v) {
  uint64_t mask = uint64_t(1) << (a & 63);
  if (v)
    words_[a >> 6] |= mask;
  else
    words_[a >> 6] &= ~mask;
}

size_t Profile::popcount() const {
  size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<uint64_t> Profile::members() const {
  std::vector<uint64_t> out;
  for (uint64_t a = 0; a < width(); ++a)
    if (test(a)) out.push_back(a);
  return out;
}

bool Profile::subset_of(const std::vector<uint64_t>& s) const {
  for (uint64_t a : members())
    if (!std::binary_search(s.begin(), s.end(), a)) return false;
  return true;
}

std::string Profile::to_hex() const {
  static const char* digits = "0123456789abcdef";
  // One hex digit per 4 bits of width, low digit first.
  std::string out;
  uint64_t nibbles = (width() + 3) / 4;
  for (uint64_t i = 0; i < nibbles; ++i) {
    uint64_t word = words_[(i * 4) >> 6];
    out.push_back(digits[(word >> ((i * 4) & 63)) & 0xf]);
  }
  return out;
}

Profile profile(const LanguageOracle& oracle, size_t n, uint64_t y) {
  Profile p(n);
  uint64_t N = p.width();
  if (oracle.kind() == OracleKind::Automaton) {
    const AlternatingAutomaton& aut = oracle.aut();
    // Acceptance of the suffix word from every state, computed once,
    // then extended backward through each length-n prefix.
    std::vector<bool> suffix_acc =
        accepts_from_all(aut, BitWord::minimal(y));
    for (uint64_t a = 0; a < N; ++a) {
      BitWord u = BitWord::from_value(a, n);
      std::vector<bool> acc = suffix_acc;
      for (size_t pos = n; pos-- > 0;) {
        std::vector<bool> next(aut.state_count());
        for (uint32_t s = 0; s < aut.state_count(); ++s)
          next[s] = aut.transition(s, u.bit(pos)).evaluate([&](uint32_t t) {
            return acc[t];
          });
        acc.swap(next);
      }
      p.set(a, acc[aut.start]);
    }
    return p;
  }
  if (y > ((uint64_t(1) << 63) - N) / N)
    throw OverflowError("profile: y*2^n + 2^n exceeds 2^63");
  for (uint64_t a = 0; a < N; ++a)
    p.set(a, oracle.contains_value(y * N + a));
  return p;
}

}  // namespace qtc
