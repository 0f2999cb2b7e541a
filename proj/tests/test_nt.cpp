#include <doctest.h>

#include <stdexcept>

#include <random>

#include "qtc/errors.hpp"
#include "qtc/nt.hpp"
#include "test_oracles.hpp"

using namespace qtc;

TEST_CASE("is_prime: small values and named cases") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(561));  // Carmichael number
  CHECK(is_prime(1'000'000'007));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("is_prime agrees with trial division up to 10^4") {
  for (uint64_t v = 0; v < 10'000; ++v)
    REQUIRE(is_prime(v) == test::trial_division_prime(v));
}

TEST_CASE("is_squarefree: examples") {
  CHECK_FALSE(is_squarefree(0));
  CHECK(is_squarefree(1));
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_squarefree(30030));  // 2*3*5*7*11*13
  CHECK_FALSE(is_squarefree(49));
  // Cofactor cases after small-prime stripping: p^2 and p*q with large p.
  CHECK_FALSE(is_squarefree(1'000'003ull * 1'000'003ull));
  CHECK(is_squarefree(1'000'003ull * 1'000'033ull));
}

TEST_CASE("is_squarefree agrees with the naive check up to 10^4") {
  for (uint64_t v = 1; v < 10'000; ++v)
    REQUIRE(is_squarefree(v) == test::naive_squarefree(v));
}

TEST_CASE("sieve_window: primes in [0,16)") {
  auto w = sieve_window(SieveKind::Primes, 0, 16);
  std::vector<uint64_t> marked;
  for (uint64_t v = 0; v < 16; ++v)
    if (w.test(v)) marked.push_back(v);
  CHECK(marked == std::vector<uint64_t>{2, 3, 5, 7, 11, 13});
}

TEST_CASE("sieve_window: squarefree in [0,16)") {
  auto w = sieve_window(SieveKind::Squarefree, 0, 16);
  std::vector<uint64_t> marked;
  for (uint64_t v = 0; v < 16; ++v)
    if (w.test(v)) marked.push_back(v);
  CHECK(marked == std::vector<uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15});
}

TEST_CASE("sieve_window: split windows concatenate bit-for-bit") {
  std::mt19937_64 rng(5);
  for (auto kind : {SieveKind::Primes, SieveKind::Squarefree}) {
    for (int trial = 0; trial < 10; ++trial) {
      uint64_t lo = rng() % 1'000'000;
      uint64_t len = 2 + rng() % 5'000;
      uint64_t mid = lo + 1 + rng() % (len - 1);
      auto whole = sieve_window(kind, lo, lo + len);
      auto left = sieve_window(kind, lo, mid);
      auto right = sieve_window(kind, mid, lo + len);
      for (uint64_t v = lo; v < lo + len; ++v)
        REQUIRE(whole.test(v) == (v < mid ? left.test(v) : right.test(v)));
    }
  }
}

TEST_CASE("sieve_window matches point tests on random high windows") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    uint64_t lo = rng() % (uint64_t(1) << 40);
    uint64_t hi = lo + 2000;
    auto pw = sieve_window(SieveKind::Primes, lo, hi);
    auto sw = sieve_window(SieveKind::Squarefree, lo, hi);
    for (int i = 0; i < 200; ++i) {
      uint64_t v = lo + rng() % (hi - lo);
      REQUIRE(pw.test(v) == is_prime(v));
      REQUIRE(sw.test(v) == is_squarefree(v));
    }
  }
}

TEST_CASE("sieve_window enforces caps") {
  CHECK_THROWS_AS(sieve_window(SieveKind::Primes, 0, 1 << 20, 1 << 10),
                  BudgetError);
  CHECK_THROWS_AS(
      sieve_window(SieveKind::Primes, 0, (uint64_t(1) << 63) + 2),
      OverflowError);
  CHECK_THROWS_AS(sieve_window(SieveKind::Primes, 5, 5), std::invalid_argument);
}

TEST_CASE("squarefree_residues") {
  CHECK(squarefree_residues(4) == std::vector<uint64_t>{1, 2, 3});
  CHECK(squarefree_residues(8) == std::vector<uint64_t>{1, 2, 3, 5, 6, 7});
  CHECK(squarefree_residues(16).size() == 11);
  CHECK_THROWS_AS(squarefree_residues(12), std::invalid_argument);
  CHECK_THROWS_AS(squarefree_residues(0), std::invalid_argument);
}

TEST_CASE("prime count via windows matches pi(10^6)") {
  uint64_t count = 0;
  for (uint64_t lo = 0; lo < 1'000'000; lo += 100'000)
    count += sieve_window(SieveKind::Primes, lo, lo + 100'000).count();
  CHECK(count == 78498);
}
