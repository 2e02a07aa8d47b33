#include <benchmark/benchmark.h>

#include "prcomb/pr_ops.hpp"
#include "prcomb/pr_verify.hpp"
#include "prcomb/prng.hpp"
#include "prcomb/witness_search.hpp"

using namespace prcomb;

namespace {

Window random_window(std::uint64_t bound, std::uint64_t density_inv, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Window w(Ground::omega(), bound);
  for (std::uint64_t x = 1; x < bound; ++x)
    if (rng.below(density_inv) == 0) w.bits.set(x);
  return w;
}

}  // namespace

static void FsClosure(benchmark::State& state) {
  const std::uint64_t cap = state.range(0);
  Window d = random_window(cap, 64, 42);
  for (auto _ : state) {
    Window img = fs(d, cap);
    benchmark::DoNotOptimize(img.count());
  }
}
BENCHMARK(FsClosure)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

static void SparseCheck(benchmark::State& state) {
  auto sel = superincreasing_subset(*SetExpr::arith_prog(1, 1), Rational(1),
                                    static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto cert = sparse_check(sel.window, sel.sparse.cap);
    benchmark::DoNotOptimize(cert.pass);
  }
}
BENCHMARK(SparseCheck)->Arg(10)->Arg(16)->Arg(20);

static void ApScan(benchmark::State& state) {
  Window w = random_window(state.range(0), 3, 7);
  for (auto _ : state) {
    auto ap = find_ap(w, 8);
    benchmark::DoNotOptimize(ap.has_value());
  }
}
BENCHMARK(ApScan)->Arg(1 << 12)->Arg(1 << 15);

static void CliqueScan(benchmark::State& state) {
  Window w(Ground::pairs(), pair_code_bound(64));
  SplitMix64 rng(9);
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = a + 1; b < 64; ++b)
      if (rng.below(3)) w.bits.set(pack_pair(a, b));
  for (auto _ : state) {
    auto h = clique_search(w, state.range(0));
    benchmark::DoNotOptimize(h.witness.has_value());
  }
}
BENCHMARK(CliqueScan)->Arg(4)->Arg(6);

static void SchurSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto r = schur_threshold(2, false, 16);
    benchmark::DoNotOptimize(r.threshold);
  }
}
BENCHMARK(SchurSearch);

static void VdwSearch(benchmark::State& state) {
  for (auto _ : state) {
    auto r = vdw_threshold(3, 2, 16);
    benchmark::DoNotOptimize(r.threshold);
  }
}
BENCHMARK(VdwSearch);

BENCHMARK_MAIN();
