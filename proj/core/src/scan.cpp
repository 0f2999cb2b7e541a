#include "qtc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <unistd.h>

#include "qtc/errors.hpp"

namespace qtc {

namespace {

uint64_t fnv1a(uint64_t h, const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Sorted on-disk run of (profile words, count) entries with a fixed
// word width.  Bounds the in-memory map during large scans.
class SpillRuns {
 public:
  SpillRuns(std::string dir, size_t words_per_profile)
      : words_(words_per_profile) {
    namespace fs = std::filesystem;
    base_ = dir.empty() ? fs::temp_directory_path() : fs::path(dir);
  }

  ~SpillRuns() {
    for (const auto& f : files_) {
      std::error_code ec;
      std::filesystem::remove(f, ec);
    }
  }

  bool empty() const { return files_.empty(); }

  void spill(const std::map<Profile, uint64_t>& counts) {
    static std::atomic<uint64_t> seq{0};
    auto path = base_ / ("qtc-scan-run-" + std::to_string(::getpid()) + "-" +
                         std::to_string(seq.fetch_add(1)) + ".bin");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open spill file " + path.string());
    for (const auto& [p, c] : counts) {
      out.write(reinterpret_cast<const char*>(p.words().data()),
                static_cast<std::streamsize>(words_ * sizeof(uint64_t)));
      out.write(reinterpret_cast<const char*>(&c), sizeof(c));
    }
    if (!out) throw std::runtime_error("spill write failed");
    files_.push_back(path);
  }

  // Merge all runs plus the residual map into one sorted map.
  std::map<Profile, uint64_t> merge(std::map<Profile, uint64_t> residual,
                                    size_t n) const {
    for (const auto& f : files_) {
      std::ifstream in(f, std::ios::binary);
      Profile p(n);
      std::vector<uint64_t> words(words_);
      uint64_t c;
      while (in.read(reinterpret_cast<char*>(words.data()),
                     static_cast<std::streamsize>(words_ * sizeof(uint64_t))) &&
             in.read(reinterpret_cast<char*>(&c), sizeof(c))) {
        Profile q(n);
        for (uint64_t a = 0; a < q.width(); ++a)
          if ((words[a >> 6] >> (a & 63)) & 1) q.set(a, true);
        residual[q] += c;
      }
    }
    return residual;
  }

 private:
  std::filesystem::path base_;
  size_t words_;
  std::vector<std::filesystem::path> files_;
};

// Census of one chunk of y values.  Integer oracles go through sieve
// windows; automaton/explicit oracles are evaluated per profile.
std::map<Profile, uint64_t> scan_chunk(const LanguageOracle& oracle, size_t n,
                                       uint64_t y_lo, uint64_t y_hi,
                                       uint64_t window_cap) {
  std::map<Profile, uint64_t> counts;
  uint64_t N = uint64_t(1) << n;
  bool sievable = oracle.kind() == OracleKind::Primes ||
                  oracle.kind() == OracleKind::Squarefree;
  if (!sievable) {
    for (uint64_t y = y_lo; y < y_hi; ++y) ++counts[profile(oracle, n, y)];
    return counts;
  }
  SieveKind sk = oracle.kind() == OracleKind::Primes ? SieveKind::Primes
                                                     : SieveKind::Squarefree;
  uint64_t ys_per_window = std::max<uint64_t>(1, window_cap / N);
  for (uint64_t y = y_lo; y < y_hi;) {
    uint64_t y_end = std::min(y_hi, y + ys_per_window);
    SieveWindow w = sieve_window(sk, y * N, y_end * N, window_cap);
    for (; y < y_end; ++y) {
      Profile p(n);
      for (uint64_t a = 0; a < N; ++a) p.set(a, w.test(y * N + a));
      ++counts[p];
    }
  }
  return counts;
}

}  // namespace

QueryTableScan finalize_census(std::string oracle_kind, size_t n,
                               uint64_t y_lo, uint64_t y_hi,
                               std::map<Profile, uint64_t> counts) {
  QueryTableScan scan;
  scan.oracle_kind = std::move(oracle_kind);
  scan.n = n;
  scan.y_lo = y_lo;
  scan.y_hi = y_hi;
  scan.popcount_histogram.assign((uint64_t(1) << n) + 1, 0);
  uint64_t h = 14695981039346656037ull;
  for (auto& [p, c] : counts) {
    scan.entries.emplace_back(p, c);
    scan.max_multiplicity = std::max(scan.max_multiplicity, c);
    ++scan.popcount_histogram[p.popcount()];
    uint64_t words = p.words().size();
    h = fnv1a(h, &words, sizeof(words));
    h = fnv1a(h, p.words().data(), words * sizeof(uint64_t));
  }
  scan.distinct = scan.entries.size();
  scan.baseline_hash = h;
  return scan;
}

QueryTableScan scan_profiles(const LanguageOracle& oracle, size_t n,
                             uint64_t y_lo, uint64_t y_hi,
                             const ScanOptions& opt) {
  if (y_lo > y_hi) throw std::invalid_argument("scan_profiles: y_lo > y_hi");
  uint64_t N = uint64_t(1) << n;
  if (oracle.kind() != OracleKind::Automaton && y_hi > 0 &&
      y_hi > (uint64_t(1) << 63) / N)
    throw OverflowError("scan_profiles: y_hi * 2^n exceeds 2^63");

  uint64_t chunk = std::max<uint64_t>(1, opt.chunk_size);
  uint64_t chunks = y_lo == y_hi ? 0 : (y_hi - y_lo + chunk - 1) / chunk;

  size_t words_per_profile = (N + 63) / 64;
  SpillRuns runs(opt.spill_dir, words_per_profile);
  std::map<Profile, uint64_t> total;

  auto absorb = [&](std::map<Profile, uint64_t>&& part) {
    for (auto& [p, c] : part) total[p] += c;
    if (total.size() > opt.profile_map_cap) {
      runs.spill(total);
      total.clear();
    }
  };

  unsigned threads = std::max(1u, opt.threads);
  if (threads == 1 || chunks <= 1) {
    for (uint64_t i = 0; i < chunks; ++i) {
      uint64_t lo = y_lo + i * chunk;
      absorb(scan_chunk(oracle, n, lo, std::min(y_hi, lo + chunk),
                        opt.window_cap));
    }
  } else {
    // Workers claim chunks by index; partial maps land in a fixed slot
    // per chunk so the merge order is schedule-independent.
    std::vector<std::map<Profile, uint64_t>> parts(chunks);
    std::atomic<uint64_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          uint64_t i = next.fetch_add(1);
          if (i >= chunks || failed.load()) return;
          uint64_t lo = y_lo + i * chunk;
          try {
            parts[i] = scan_chunk(oracle, n, lo, std::min(y_hi, lo + chunk),
                                  opt.window_cap);
          } catch (...) {
            failed.store(true);
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failed.load())
      throw BudgetError("scan_profiles: worker failed (budget or overflow)");
    for (auto& part : parts) absorb(std::move(part));
  }

  if (!runs.empty()) total = runs.merge(std::move(total), n);
  return finalize_census(oracle.kind_name(), n, y_lo, y_hi, std::move(total));
}

RichnessReport richness_report(uint64_t x, size_t n, uint64_t window_cap) {
  uint64_t N = uint64_t(1) << n;
  if (n == 0 || x < N)
    throw std::invalid_argument("richness_report: need x >= 2^n >= 2");
  RichnessReport r;
  r.x = x;
  r.n = n;
  r.N = N;
  double lnx = std::log(static_cast<double>(x));
  r.threshold = static_cast<double>(N) / (2.0 * lnx);
  r.threshold_log2 = static_cast<double>(N) / (2.0 * std::log2(static_cast<double>(x)));
  r.rich_lower_bound = static_cast<double>(x) / (2.0 * static_cast<double>(N) * lnx);
  r.interval_count = x / N;  // intervals [yN, (y+1)N) with (y+1)N <= x

  uint64_t ys_per_window = std::max<uint64_t>(1, window_cap / N);
  for (uint64_t y = 0; y < r.interval_count;) {
    uint64_t y_end = std::min(r.interval_count, y + ys_per_window);
    SieveWindow w = sieve_window(SieveKind::Primes, y * N, y_end * N, window_cap);
    for (; y < y_end; ++y) {
      uint64_t primes = 0;
      for (uint64_t v = y * N; v < (y + 1) * N; ++v) primes += w.test(v);
      bool rich = static_cast<double>(primes) >= r.threshold;
      if (y == 0) {
        r.first_interval_primes = primes;
        r.first_interval_rich = rich;
      }
      if (rich)
        ++r.rich_count;
      else {
        ++r.poor_count;
        r.poor_prime_total += primes;
      }
    }
  }
  return r;
}

DfaProfileBoundCheck dfa_profile_bound_check(const AlternatingAutomaton& aut,
                                             size_t n, size_t suffix_len_max,
                                             uint64_t work_cap) {
  if (!aut.is_deterministic())
    throw std::invalid_argument("dfa_profile_bound_check: automaton not deterministic");
  uint64_t N = uint64_t(1) << n;
  uint64_t suffixes = (uint64_t(1) << (suffix_len_max + 1)) - 1;
  if (suffix_len_max >= 62 || suffixes > work_cap / std::max<uint64_t>(1, N))
    throw BudgetError("dfa_profile_bound_check: enumeration exceeds work cap");

  // End state of each length-n prefix, by path following.
  std::vector<uint32_t> end_state(N);
  for (uint64_t a = 0; a < N; ++a) {
    uint32_t s = aut.start;
    for (size_t i = 0; i < n; ++i)
      s = aut.transition(s, (a >> i) & 1).atoms()[0];
    end_state[a] = s;
  }

  std::set<Profile> profiles;
  for (size_t slen = 0; slen <= suffix_len_max; ++slen) {
    for (uint64_t sv = 0; sv < (uint64_t(1) << slen); ++sv) {
      std::vector<bool> acc =
          accepts_from_all(aut, BitWord::from_value(sv, slen));
      Profile p(n);
      for (uint64_t a = 0; a < N; ++a) p.set(a, acc[end_state[a]]);
      profiles.insert(std::move(p));
    }
  }

  DfaProfileBoundCheck out;
  out.distinct_profiles = profiles.size();
  out.reachable_states = reachable_census(aut, aut.state_count()).back();
  out.bound = out.reachable_states >= 63 ? (uint64_t(1) << 63)
                                         : (uint64_t(1) << out.reachable_states);
  out.holds = out.distinct_profiles <= out.bound;
  return out;
}

CoverageReport profile_coverage_census(size_t n, uint64_t y_bound,
                                       const ScanOptions& opt) {
  if (n < 2)
    throw std::invalid_argument("profile_coverage_census: requires n >= 2");
  QueryTableScan scan =
      scan_profiles(LanguageOracle::squarefree(), n, 0, y_bound, opt);
  std::vector<uint64_t> s = squarefree_residues(uint64_t(1) << n);
  if (s.size() >= 63)
    throw BudgetError("profile_coverage_census: 2^|S| not representable");
  CoverageReport r;
  r.n = n;
  r.y_bound = y_bound;
  r.s_size = s.size();
  r.target = uint64_t(1) << s.size();
  r.all_subsets_of_s = true;
  std::set<Profile> in_s;
  for (const auto& [p, c] : scan.entries) {
    if (p.subset_of(s))
      in_s.insert(p);
    else
      r.all_subsets_of_s = false;
  }
  r.observed = in_s.size();
  r.coverage = static_cast<double>(r.observed) / static_cast<double>(r.target);
  return r;
}

}  // namespace qtc
