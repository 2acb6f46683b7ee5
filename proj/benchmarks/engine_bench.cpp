#include <benchmark/benchmark.h>

#include "sgcf/sgcf.hpp"

using namespace sgcf;

namespace {

ChipFiringPair negative_wheel(std::size_t n) {
  return make_pair(build({FamilyKind::wheel, n, Variant::all_negative, {}}));
}

void BM_PairSetup(benchmark::State& state) {
  const auto g = build({FamilyKind::wheel, static_cast<std::size_t>(state.range(0)), Variant::all_negative, {}});
  for (auto _ : state) benchmark::DoNotOptimize(make_pair(g));
}
BENCHMARK(BM_PairSetup)->RangeMultiplier(2)->Range(4, 32);

// Stabilizing a large multiple of the maximal stable load.
void BM_Stabilize(benchmark::State& state) {
  const auto p = negative_wheel(8);
  const auto crit = enumerate_criticals(p);
  Configuration x(p.dimension());
  for (long k = 0; k < state.range(0); ++k) x += crit[static_cast<std::size_t>(k) % crit.size()];
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(p, x));
}
BENCHMARK(BM_Stabilize)->RangeMultiplier(4)->Range(2, 512);

void BM_CriticalRep(benchmark::State& state) {
  const auto p = negative_wheel(static_cast<std::size_t>(state.range(0)));
  const Configuration zero(p.dimension());
  for (auto _ : state) benchmark::DoNotOptimize(critical_rep(p, zero));
}
BENCHMARK(BM_CriticalRep)->DenseRange(4, 12, 4);

void BM_EnumerateCriticals(benchmark::State& state) {
  const auto p = negative_wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_criticals(p));
  state.counters["classes"] = static_cast<double>(BigInt(abs(p.det_L())).get_d());
}
BENCHMARK(BM_EnumerateCriticals)->DenseRange(3, 6);

void BM_EnumerateSuperstables(benchmark::State& state) {
  const auto p = negative_wheel(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_superstables(p));
}
BENCHMARK(BM_EnumerateSuperstables)->DenseRange(3, 6);

void BM_SuperstableBoxSearch(benchmark::State& state) {
  const auto p = negative_wheel(static_cast<std::size_t>(state.range(0)));
  EngineOptions opts;
  opts.superstable_search = SuperstableSearch::box;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_superstables(p, opts));
}
BENCHMARK(BM_SuperstableBoxSearch)->DenseRange(3, 4);

}  // namespace
