#ifndef QTC_SCAN_HPP
#define QTC_SCAN_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtc/nt.hpp"
#include "qtc/oracle.hpp"
#include "qtc/profile.hpp"

namespace qtc {

struct ScanOptions {
  uint64_t chunk_size = 1 << 16;    // y values per work unit
  unsigned threads = 1;
  uint64_t window_cap = kDefaultWindowCap;
  // In-memory distinct-profile cap; rarer profiles spill to sorted
  // on-disk runs beyond this and are merged at the end.
  uint64_t profile_map_cap = uint64_t(1) << 20;
  std::string spill_dir;            // empty: system temp dir
};

// Distinct-profile census with multiplicities over y in [y_lo, y_hi).
struct QueryTableScan {
  std::string oracle_kind;
  size_t n = 0;
  uint64_t y_lo = 0;
  uint64_t y_hi = 0;
  // Sorted ascending by profile; counts are the |Y_A| multiplicities.
  std::vector<std::pair<Profile, uint64_t>> entries;
  uint64_t distinct = 0;
  uint64_t max_multiplicity = 0;
  // popcount_histogram[k] = distinct profiles with exactly k members.
  std::vector<uint64_t> popcount_histogram;
  // FNV-1a over the sorted distinct-profile set; regression anchor.
  uint64_t baseline_hash = 0;
};

QueryTableScan scan_profiles(const LanguageOracle& oracle, size_t n,
                             uint64_t y_lo, uint64_t y_hi,
                             const ScanOptions& opt = {});

// Census summary (histogram, max multiplicity, hash) from a sorted
// multiplicity map; exposed for merging partial censuses.
QueryTableScan finalize_census(std::string oracle_kind, size_t n,
                               uint64_t y_lo, uint64_t y_hi,
                               std::map<Profile, uint64_t> counts);

// Prime counts per length-N interval [yN, (y+1)N) with (y+1)N <= x,
// classified against the threshold N / (2 ln x).
struct RichnessReport {
  uint64_t x = 0;
  size_t n = 0;
  uint64_t N = 0;
  double threshold = 0;        // N / (2 ln x)
  double threshold_log2 = 0;   // N / (2 log2 x), for comparison
  uint64_t interval_count = 0;
  uint64_t rich_count = 0;
  uint64_t poor_count = 0;
  uint64_t poor_prime_total = 0;
  double rich_lower_bound = 0;  // x / (2 N ln x)
  uint64_t first_interval_primes = 0;
  bool first_interval_rich = false;
};

RichnessReport richness_report(uint64_t x, size_t n,
                               uint64_t window_cap = kDefaultWindowCap);

struct DfaProfileBoundCheck {
  bool holds = false;
  uint64_t distinct_profiles = 0;
  size_t reachable_states = 0;
  uint64_t bound = 0;  // min(2^reachable, 2^63)
};

// Profiles of order n over every suffix of length <= suffix_len_max of
// a deterministic automaton, checked against 2^{reachable states}.
DfaProfileBoundCheck dfa_profile_bound_check(
    const AlternatingAutomaton& aut, size_t n, size_t suffix_len_max,
    uint64_t work_cap = uint64_t(1) << 28);

// Coverage of the squarefree profile space: fraction of subsets of
// S = squarefree residues < 2^n realized in a scan over [0, y_bound).
// Requires n >= 2; every observed profile must be a subset of S.
struct CoverageReport {
  size_t n = 0;
  uint64_t y_bound = 0;
  uint64_t s_size = 0;
  uint64_t observed = 0;       // distinct profiles that are subsets of S
  uint64_t target = 0;         // 2^{|S|}
  double coverage = 0;
  bool all_subsets_of_s = false;
};

CoverageReport profile_coverage_census(size_t n, uint64_t y_bound,
                                       const ScanOptions& opt = {});

}  // namespace qtc

#endif
