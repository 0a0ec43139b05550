// Serial reference vs OpenMP kernels on the hot paths. Run via the
// branchlab_bench target; pass --benchmark_min_time=... to tune.

#include <benchmark/benchmark.h>

#include "branchlab/gd_presets.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/verify.hpp"

using namespace branchlab;

namespace {

GroupWord bench_word(int d, size_t len, uint64_t seed) {
  WordSampler rng(d, seed);
  GroupWord w = rng.random_word(len);
  while (w.size() < len / 2) w = rng.random_word(len);
  return w;
}

// Commutators have zero exponent vector, so each decision runs a real
// section closure instead of the fast rejection.
std::vector<GroupWord> bench_words(int d, size_t count, size_t len, uint64_t seed) {
  WordSampler rng(d, seed);
  std::vector<GroupWord> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    GroupWord u = rng.random_word(len), v = rng.random_word(len);
    out.push_back(commutator(u, v));
  }
  return out;
}

std::vector<TraceWord> bench_traces(int d, size_t count, size_t len, uint64_t seed) {
  WordSampler rng(d, seed);
  std::vector<TraceWord> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) out.push_back(rng.random_trace(1 + rng.below(len)));
  return out;
}

void BM_level_perm_recursive(benchmark::State& state) {
  WreathSystem sys = gd_system(3);
  GroupWord w = bench_word(3, 16, 1);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(level_perm(sys, w, k));
}

void BM_level_perm_flat_serial(benchmark::State& state) {
  WreathSystem sys = gd_system(3);
  GroupWord w = bench_word(3, 16, 1);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(par::level_perm_flat_serial(sys, w, k));
}

void BM_level_perm_flat_parallel(benchmark::State& state) {
  WreathSystem sys = gd_system(3);
  GroupWord w = bench_word(3, 16, 1);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(par::level_perm_flat_parallel(sys, w, k));
}

void BM_batch_identity_serial(benchmark::State& state) {
  WreathSystem sys = gd_system(5);
  auto words = bench_words(5, static_cast<size_t>(state.range(0)), 12, 2);
  for (auto _ : state) {
    WreathSystem fresh = gd_system(5); // cold memo each round
    benchmark::DoNotOptimize(par::batch_is_identity_serial(fresh, words));
  }
}

void BM_batch_identity_parallel(benchmark::State& state) {
  WreathSystem sys = gd_system(5);
  auto words = bench_words(5, static_cast<size_t>(state.range(0)), 12, 2);
  for (auto _ : state) {
    WreathSystem fresh = gd_system(5);
    benchmark::DoNotOptimize(par::batch_is_identity_parallel(fresh, words));
  }
}

void BM_trace_pairs_serial(benchmark::State& state) {
  WreathSystem sys = gd_system(5);
  auto words = bench_traces(5, static_cast<size_t>(state.range(0)), 4, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(par::trace_tree_discrepancies_serial(sys, words));
}

void BM_trace_pairs_parallel(benchmark::State& state) {
  WreathSystem sys = gd_system(5);
  auto words = bench_traces(5, static_cast<size_t>(state.range(0)), 4, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(par::trace_tree_discrepancies_parallel(sys, words));
}

void BM_growth_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(par::growth_count_serial(5, n));
}

void BM_growth_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(par::growth_count_parallel(5, n));
}

} // namespace

BENCHMARK(BM_level_perm_recursive)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_level_perm_flat_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_level_perm_flat_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_identity_serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_identity_parallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_pairs_serial)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trace_pairs_parallel)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_growth_serial)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_growth_parallel)->Arg(9)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
