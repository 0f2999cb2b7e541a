#ifndef QTC_NT_HPP
#define QTC_NT_HPP

#include <cstdint>
#include <vector>

namespace qtc {

// Deterministic primality for the full 64-bit range (fixed
// Miller-Rabin witness set; no probabilistic acceptance).
bool is_prime(uint64_t v);

// True iff no prime square divides v.  0 is not squarefree, 1 is.
bool is_squarefree(uint64_t v);

// Largest r with r*r <= v.
uint64_t isqrt(uint64_t v);

enum class SieveKind : uint8_t { Primes, Squarefree };

// Membership indicator for each value in [lo, hi).  Splitting a range
// into windows at any point yields bit-identical results.
struct SieveWindow {
  SieveKind kind;
  uint64_t lo = 0;
  uint64_t hi = 0;
  std::vector<bool> bits;

  bool test(uint64_t v) const { return bits[v - lo]; }
  uint64_t count() const;
};

// Default window cap, in entries.
inline constexpr uint64_t kDefaultWindowCap = uint64_t(1) << 26;

// Primes: segmented Eratosthenes with base primes <= sqrt(hi).
// Squarefree: marks multiples of p^2 for every p^2 < hi.
// Throws BudgetError when hi - lo exceeds the cap, OverflowError when
// hi > 2^63.
SieveWindow sieve_window(SieveKind kind, uint64_t lo, uint64_t hi,
                         uint64_t window_cap = kDefaultWindowCap);

// All primes <= limit, by plain sieve.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Ascending squarefree a with 1 <= a < N; N must be a power of two >= 2.
std::vector<uint64_t> squarefree_residues(uint64_t N);

}  // namespace qtc

#endif
