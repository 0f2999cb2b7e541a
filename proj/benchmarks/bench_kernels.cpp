#include <benchmark/benchmark.h>

#include "qtc/nt.hpp"
#include "qtc/scan.hpp"

namespace {

void BM_SieveWindowPrimes(benchmark::State& state) {
  uint64_t len = state.range(0);
  uint64_t lo = uint64_t(1) << 32;
  for (auto _ : state) {
    auto w = qtc::sieve_window(qtc::SieveKind::Primes, lo, lo + len);
    benchmark::DoNotOptimize(w.bits.size());
  }
  state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_SieveWindowPrimes)->Range(1 << 16, 1 << 22);

void BM_SieveWindowSquarefree(benchmark::State& state) {
  uint64_t len = state.range(0);
  uint64_t lo = uint64_t(1) << 32;
  for (auto _ : state) {
    auto w = qtc::sieve_window(qtc::SieveKind::Squarefree, lo, lo + len);
    benchmark::DoNotOptimize(w.bits.size());
  }
  state.SetItemsProcessed(state.iterations() * len);
}
BENCHMARK(BM_SieveWindowSquarefree)->Range(1 << 16, 1 << 22);

void BM_IsPrime64(benchmark::State& state) {
  uint64_t v = 0xfffffffffffffff1ull;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qtc::is_prime(v));
    --v;
  }
}
BENCHMARK(BM_IsPrime64);

void BM_ScanProfiles(benchmark::State& state) {
  auto oracle = qtc::LanguageOracle::squarefree();
  uint64_t y_hi = state.range(0);
  qtc::ScanOptions opt;
  opt.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto scan = qtc::scan_profiles(oracle, 4, 0, y_hi, opt);
    benchmark::DoNotOptimize(scan.distinct);
  }
  state.SetItemsProcessed(state.iterations() * y_hi);
}
BENCHMARK(BM_ScanProfiles)
    ->Args({100'000, 1})
    ->Args({100'000, 4})
    ->Args({1'000'000, 4});

}  // namespace

BENCHMARK_MAIN();
