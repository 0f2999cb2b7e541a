#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "qtc/crt.hpp"
#include "qtc/errors.hpp"
#include "qtc/nt.hpp"
#include "qtc/scan.hpp"
#include "test_oracles.hpp"

using namespace qtc;

TEST_CASE("smallest_square_divisor") {
  CHECK(smallest_square_divisor(1) == 0);
  CHECK(smallest_square_divisor(12) == 2);
  CHECK(smallest_square_divisor(45) == 3);
  CHECK(smallest_square_divisor(30030) == 0);
  CHECK(smallest_square_divisor(1'000'003ull * 1'000'003ull) == 1'000'003);
}

TEST_CASE("construct_witness: n=3, T=S gives y=4") {
  auto w = construct_witness(3, {1, 2, 3, 5, 6, 7});
  CHECK(w.q == 4);
  CHECK(w.q_prime == 4);
  CHECK(w.assignment.empty());
  CHECK(w.y == 4);  // 32..39: 33,34,35,37,38,39 squarefree; 32,36 not
  CHECK(w.verified);
}

TEST_CASE("construct_witness: n=3, T={1,3,5,7}") {
  auto w = construct_witness(3, {1, 3, 5, 7});
  REQUIRE(w.assignment.size() == 2);
  CHECK(w.assignment[0] == std::pair<uint64_t, uint64_t>{2, 3});
  CHECK(w.assignment[1] == std::pair<uint64_t, uint64_t>{6, 5});
  CHECK(w.q == 4);
  CHECK(w.q_prime == 900);
  CHECK(w.y0 == 668);
  CHECK(w.z == 0);
  CHECK(w.y == 668);
  CHECK((8 * w.y + 2) % 9 == 0);
  CHECK((8 * w.y + 6) % 25 == 0);
  CHECK(w.verified);
}

TEST_CASE("construct_witness: n=2, T = empty set") {
  auto w = construct_witness(2, {});
  CHECK(w.verified);
  for (uint64_t a = 0; a < 4; ++a)
    CHECK_FALSE(test::naive_squarefree(4 * w.y + a));
}

TEST_CASE("CRT solution satisfies every congruence") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<uint64_t> s = squarefree_residues(8);
    std::vector<uint64_t> target;
    for (uint64_t a : s)
      if (rng() % 2) target.push_back(a);
    auto w = construct_witness(3, target);
    CHECK(w.y0 < w.q_prime);
    CHECK(w.y0 % w.q == 0);
    CHECK(w.y % w.q_prime == w.y0);
    for (auto [a, p] : w.assignment)
      CHECK((w.y0 * w.N + a) % (p * p) == 0);
    CHECK(w.verified);
    // Full profile equality against the naive point test.
    for (uint64_t a = 0; a < w.N; ++a)
      REQUIRE(test::naive_squarefree(w.y * w.N + a) ==
              std::binary_search(w.target.begin(), w.target.end(), a));
  }
}

TEST_CASE("all 8 subsets at n=2 construct and verify") {
  std::vector<uint64_t> s = squarefree_residues(4);
  for (uint64_t mask = 0; mask < 8; ++mask) {
    std::vector<uint64_t> target;
    for (size_t i = 0; i < s.size(); ++i)
      if ((mask >> i) & 1) target.push_back(s[i]);
    auto w = construct_witness(2, target);
    CHECK(w.verified);
  }
}

TEST_CASE("witness construction is deterministic") {
  auto a = construct_witness(3, {1, 2, 6});
  auto b = construct_witness(3, {1, 2, 6});
  CHECK(a.y == b.y);
  CHECK(a.z == b.z);
  CHECK(a.q_prime == b.q_prime);
  CHECK(a.assignment == b.assignment);
}

TEST_CASE("verify_witness rejects a tampered witness") {
  auto w = construct_witness(3, {1, 3, 5, 7});
  REQUIRE(w.verified);
  w.y += 1;
  CHECK_FALSE(verify_witness(w));
  bool named_violation = false;
  for (const auto& e : w.transcript) {
    if (!e.ok) {
      named_violation = true;
      if (!e.squarefree) CHECK((e.value % (e.square_divisor * e.square_divisor)) == 0);
    }
  }
  CHECK(named_violation);
}

TEST_CASE("transcript records a square divisor for every forced index") {
  auto w = construct_witness(3, {1, 3, 5, 7});
  REQUIRE(w.transcript.size() == 8);
  for (const auto& e : w.transcript) {
    CHECK(e.ok);
    if (e.in_target) {
      CHECK(e.squarefree);
      CHECK(e.square_divisor == 0);
    } else {
      CHECK_FALSE(e.squarefree);
      CHECK(e.square_divisor >= 2);
      CHECK(e.value % (e.square_divisor * e.square_divisor) == 0);
    }
  }
}

TEST_CASE("construct_witness argument validation") {
  CHECK_THROWS_AS(construct_witness(1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness(3, {4}), std::invalid_argument);  // 4 not squarefree
  CHECK_THROWS_AS(construct_witness(5, {1}), BudgetError);            // above cap
  // n=4 allowed only when |S \ T| <= 5.
  CHECK_THROWS_AS(construct_witness(4, {1, 2}), BudgetError);
}

TEST_CASE("construct_witness at n=4 with a near-full target") {
  std::vector<uint64_t> s = squarefree_residues(16);
  std::vector<uint64_t> target(s.begin(), s.end() - 2);  // |S \ T| = 2
  auto w = construct_witness(4, target);
  CHECK(w.verified);
  CHECK(w.base_primes == std::vector<uint64_t>{2, 3});
  CHECK(w.q == 36);
}

TEST_CASE("search exhaustion reports q' and the bound") {
  CrtOptions opt;
  opt.z_bound = 0;
  opt.max_retries = 0;
  // T = S has y0 = 0 and witnesses must be positive, so z = 0 alone
  // cannot succeed.
  CHECK_THROWS_WITH_AS(construct_witness(3, {1, 2, 3, 5, 6, 7}, opt),
                       doctest::Contains("q'"), BudgetError);
}

TEST_CASE("padding retry recovers from a too-small z bound") {
  // Find a proper target whose plain z=0 search fails, then let the
  // padding retry rescue it.
  std::vector<uint64_t> s = squarefree_residues(8);
  CrtOptions tight{3, 0, 0};
  CrtOptions padded{3, 0, 8};
  for (uint64_t mask = 0; mask + 1 < 64; ++mask) {
    std::vector<uint64_t> target;
    for (size_t i = 0; i < s.size(); ++i)
      if ((mask >> i) & 1) target.push_back(s[i]);
    try {
      construct_witness(3, target, tight);
      continue;
    } catch (const BudgetError&) {
    }
    auto w = construct_witness(3, target, padded);
    CHECK(w.verified);
    CHECK_FALSE(w.padding_primes.empty());
    for (uint64_t p : w.padding_primes) CHECK(w.y % (p * p) == 0);
    return;
  }
  // All single-shot searches succeeded; nothing to rescue.
}

TEST_CASE("profile_coverage_census: full coverage at n=2") {
  auto r = profile_coverage_census(2, 10'000);
  CHECK(r.s_size == 3);
  CHECK(r.observed == 8);
  CHECK(r.coverage == 1.0);
  CHECK(r.all_subsets_of_s);
}

TEST_CASE("profile_coverage_census: n=3 needs y past 10^6") {
  // The empty profile (eight consecutive non-squarefree values) first
  // occurs at y = 1108753, so coverage at 10^6 is 63/64 and full
  // coverage is reached just beyond.
  auto at_1e6 = profile_coverage_census(3, 1'000'000);
  CHECK(at_1e6.observed == 63);
  CHECK(at_1e6.all_subsets_of_s);
  auto wide = profile_coverage_census(3, 1'200'000);
  CHECK(wide.coverage == 1.0);
}

TEST_CASE("profile_coverage_census rejects n=1") {
  CHECK_THROWS_AS(profile_coverage_census(1, 100), std::invalid_argument);
}
