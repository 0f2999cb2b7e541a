#include "qtc/crt.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtc/errors.hpp"
#include "qtc/nt.hpp"

namespace qtc {

namespace {

uint64_t modinv(uint64_t a, uint64_t m) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::invalid_argument("modinv: not invertible");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(m) : t);
}

// Incremental CRT over pairwise coprime moduli.
struct CrtSystem {
  uint64_t residue = 0;
  uint64_t modulus = 1;

  void add(uint64_t r2, uint64_t m2) {
    if (modulus > (uint64_t(1) << 62) / m2)
      throw OverflowError("crt: modulus product exceeds range");
    uint64_t diff = (r2 + m2 - residue % m2) % m2;
    uint64_t t = static_cast<uint64_t>(
        (__uint128_t(diff) * modinv(modulus % m2, m2)) % m2);
    residue += modulus * t;
    modulus *= m2;
  }
};

uint64_t next_odd_prime(uint64_t p) {
  uint64_t c = p < 3 ? 3 : p + 2;
  while (!is_prime(c)) c += 2;
  return c;
}

// One CRT solve + z search for a fixed set of padding primes.
// Returns true and fills y0/z/y on success.
bool solve_and_search(CrtWitness& w, const CrtOptions& opt) {
  CrtSystem sys;
  if (w.q > 1) sys.add(0, w.q);
  for (auto [a, p] : w.assignment) {
    uint64_t p2 = p * p;
    // y*N = -a (mod p^2); N invertible since p is odd.
    uint64_t rhs = (p2 - a % p2) % p2;
    uint64_t r = static_cast<uint64_t>(
        (__uint128_t(rhs) * modinv(w.N % p2, p2)) % p2);
    sys.add(r, p2);
  }
  for (uint64_t p : w.padding_primes) sys.add(0, p * p);
  w.q_prime = sys.modulus;
  w.y0 = sys.residue;

  uint64_t limit = (uint64_t(1) << 63) / w.N - 1;  // y*N + N <= 2^63
  for (uint64_t z = 0; z <= opt.z_bound; ++z) {
    if (w.y0 > limit || z > (limit - w.y0) / w.q_prime)
      throw OverflowError("construct_witness: y*N + N exceeds 2^63");
    uint64_t y = z * w.q_prime + w.y0;
    if (y == 0) continue;  // witnesses are positive integers
    bool ok = true;
    for (uint64_t a : w.target)
      if (!is_squarefree(y * w.N + a)) {
        ok = false;
        break;
      }
    if (ok) {
      w.z = z;
      w.y = y;
      return true;
    }
  }
  return false;
}

}  // namespace

uint64_t smallest_square_divisor(uint64_t v) {
  if (v < 4) return 0;
  uint64_t best = 0;
  uint64_t m = v;
  for (uint64_t p = 2; p * p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e >= 2) return p;
  }
  if (m > 1) {
    uint64_t r = isqrt(m);
    if (r * r == m) best = r;
  }
  return best;
}

CrtWitness construct_witness(size_t n, const std::vector<uint64_t>& target,
                             const CrtOptions& opt) {
  if (n < 2)
    throw std::invalid_argument(
        "construct_witness: n must be >= 2 (profiles at n = 1 are not "
        "subsets of S)");
  CrtWitness w;
  w.n = n;
  w.N = uint64_t(1) << n;
  w.s_residues = squarefree_residues(w.N);
  w.target = target;
  std::sort(w.target.begin(), w.target.end());
  w.target.erase(std::unique(w.target.begin(), w.target.end()), w.target.end());
  for (uint64_t a : w.target)
    if (!std::binary_search(w.s_residues.begin(), w.s_residues.end(), a))
      throw std::invalid_argument("construct_witness: target element " +
                                  std::to_string(a) +
                                  " is not a squarefree residue below 2^n");

  std::vector<uint64_t> complement;
  for (uint64_t a : w.s_residues)
    if (!std::binary_search(w.target.begin(), w.target.end(), a))
      complement.push_back(a);

  if (n > opt.n_cap && !(n == 4 && complement.size() <= 5))
    throw BudgetError("construct_witness: order cap exceeded (n = " +
                      std::to_string(n) + ")");

  for (uint64_t p = 2; p * p < w.N; p = next_odd_prime(p)) {
    w.base_primes.push_back(p);
    w.q *= p * p;
  }

  // Ascending a in S \ T get ascending odd primes above the base set;
  // auxiliary primes must be odd so N stays invertible mod p^2.
  uint64_t p = w.base_primes.empty() ? 2 : w.base_primes.back();
  for (uint64_t a : complement) {
    p = next_odd_prime(p);
    w.assignment.emplace_back(a, p);
  }

  for (unsigned attempt = 0;; ++attempt) {
    if (solve_and_search(w, opt)) break;
    if (attempt >= opt.max_retries)
      throw BudgetError("construct_witness: search exhausted at z bound " +
                        std::to_string(opt.z_bound) + " with q' = " +
                        std::to_string(w.q_prime));
    p = next_odd_prime(p);
    w.padding_primes.push_back(p);
  }

  verify_witness(w);
  return w;
}

bool verify_witness(CrtWitness& w) {
  if (w.N == 0 || w.y > (uint64_t(1) << 63) / w.N - 1)
    throw OverflowError("verify_witness: y*N + N exceeds 2^63");
  w.transcript.clear();
  bool all_ok = true;
  for (uint64_t a = 0; a < w.N; ++a) {
    CrtWitness::TranscriptEntry e;
    e.a = a;
    e.value = w.y * w.N + a;
    e.in_target = std::binary_search(w.target.begin(), w.target.end(), a);
    e.squarefree = is_squarefree(e.value);
    if (!e.squarefree) e.square_divisor = smallest_square_divisor(e.value);
    e.ok = e.squarefree == e.in_target;
    all_ok = all_ok && e.ok;
    w.transcript.push_back(e);
  }
  w.verified = all_ok;
  return all_ok;
}

}  // namespace qtc
