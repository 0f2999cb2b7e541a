#include "qtc/nt.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtc/errors.hpp"

namespace qtc {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((__uint128_t(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool miller_rabin(uint64_t n, uint64_t a) {
  uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (v == p) return true;
    if (v % p == 0) return false;
  }
  // Sinclair's 7-witness base set, deterministic below 2^64.
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                     1795265022ull}) {
    if (a % v == 0) continue;
    if (!miller_rabin(v, a)) return false;
  }
  return true;
}

uint64_t isqrt(uint64_t v) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r > v / r) --r;
  while ((r + 1) <= v / (r + 1)) ++r;
  return r;
}

bool is_squarefree(uint64_t v) {
  if (v == 0) return false;
  if (v == 1) return true;
  // Strip primes p <= v^{1/3}; the cofactor then has at most two prime
  // factors, so it is non-squarefree exactly when it is a square > 1.
  uint64_t m = v;
  for (uint64_t p = 2; p * p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2) return false;
  }
  if (m > 1) {
    uint64_t r = isqrt(m);
    if (r * r == m) return false;
  }
  return true;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
  std::vector<uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return primes;
}

uint64_t SieveWindow::count() const {
  return static_cast<uint64_t>(std::count(bits.begin(), bits.end(), true));
}

SieveWindow sieve_window(SieveKind kind, uint64_t lo, uint64_t hi,
                         uint64_t window_cap) {
  if (lo >= hi) throw std::invalid_argument("sieve_window: lo >= hi");
  if (hi > (uint64_t(1) << 63)) throw OverflowError("sieve_window: hi > 2^63");
  if (hi - lo > window_cap)
    throw BudgetError("sieve_window: window exceeds configured cap");

  SieveWindow w{kind, lo, hi, std::vector<bool>(hi - lo, false)};
  if (kind == SieveKind::Primes) {
    for (uint64_t v = lo; v < hi; ++v) w.bits[v - lo] = v >= 2;
    uint64_t root = isqrt(hi - 1);
    for (uint64_t p : primes_up_to(root)) {
      uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (uint64_t m = start; m < hi; m += p) w.bits[m - lo] = false;
    }
  } else {
    for (uint64_t v = lo; v < hi; ++v) w.bits[v - lo] = v >= 1;
    for (uint64_t p = 2; p * p < hi; p += (p == 2 ? 1 : 2)) {
      // Composite p re-marks values already covered by its prime
      // factors' squares; no primality filter needed.
      uint64_t sq = p * p;
      uint64_t start = ((lo + sq - 1) / sq) * sq;
      for (uint64_t m = start; m < hi; m += sq) w.bits[m - lo] = false;
    }
  }
  return w;
}

std::vector<uint64_t> squarefree_residues(uint64_t N) {
  if (N < 2 || (N & (N - 1)) != 0)
    throw std::invalid_argument("squarefree_residues: N must be a power of two >= 2");
  std::vector<uint64_t> out;
  for (uint64_t a = 1; a < N; ++a)
    if (is_squarefree(a)) out.push_back(a);
  return out;
}

}  // namespace qtc
