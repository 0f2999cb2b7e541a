#ifndef QTC_CRT_HPP
#define QTC_CRT_HPP

#include <cstdint>
#include <vector>

namespace qtc {

struct CrtOptions {
  // Order cap for exact verification; n = 4 is additionally allowed
  // when |S \ T| <= 5 and the overflow guard passes.
  size_t n_cap = 3;
  // Search bound on z; on exhaustion the next unused auxiliary prime
  // is appended (forcing y = 0 mod p^2) and the search retried.
  uint64_t z_bound = 1'000'000;
  unsigned max_retries = 8;
};

// Transcript of the congruence construction that realizes a chosen
// squarefree profile T at order n: y = z * q' + y0 with
//   y * N = -a (mod p^2) for each assigned pair (a, p), a in S \ T,
//   y     =  0 (mod q),  q = product of p^2 over primes p^2 < N,
// and y * N + a squarefree for every a in T.
struct CrtWitness {
  size_t n = 0;
  uint64_t N = 0;
  std::vector<uint64_t> target;       // T, ascending
  std::vector<uint64_t> s_residues;   // S = squarefree residues < N
  std::vector<uint64_t> base_primes;  // primes p with p^2 < N
  uint64_t q = 1;
  // Ascending a in S \ T paired with ascending odd primes > base.
  std::vector<std::pair<uint64_t, uint64_t>> assignment;
  // Extra primes forced to y = 0 (mod p^2) by exhaustion retries.
  std::vector<uint64_t> padding_primes;
  uint64_t q_prime = 1;
  uint64_t y0 = 0;
  uint64_t z = 0;
  uint64_t y = 0;
  bool verified = false;

  struct TranscriptEntry {
    uint64_t a = 0;
    uint64_t value = 0;         // y * N + a
    bool in_target = false;
    bool squarefree = false;
    uint64_t square_divisor = 0;  // smallest p with p^2 | value, 0 if none
    bool ok = false;              // squarefree == in_target
  };
  std::vector<TranscriptEntry> transcript;
};

// Smallest prime p with p^2 | v, or 0 if v is squarefree (or 0/1).
uint64_t smallest_square_divisor(uint64_t v);

// Builds the congruence system for (n, T), solves it by CRT and
// searches z = 0, 1, ... for the first fully verifying witness.
// Deterministic: fixed assignment rule, ascending z.
// Throws: invalid_argument (bad n or T not a subset of S), BudgetError
// (cap exceeded or search exhausted), OverflowError.
CrtWitness construct_witness(size_t n, const std::vector<uint64_t>& target,
                             const CrtOptions& opt = {});

// Re-checks a witness: is_squarefree(y*N + a) <=> a in T
// for every a < N.  Fills the transcript and the verified flag.
bool verify_witness(CrtWitness& w);

}  // namespace qtc

#endif
