#include "tdl/census.hpp"
#include "tdl/census_naive.hpp"
#include "tdl/ensembles.hpp"
#include "tdl/rng.hpp"

#include <benchmark/benchmark.h>

namespace {

tdl::KOutDigraph kout_fixture(int n, int k) {
  tdl::Rng rng(1234);
  return tdl::sample_kout(n, k, rng);
}

void BM_CensusKOut(benchmark::State& state) {
  const auto g = kout_fixture(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    const auto r = tdl::count_kout(g, {false});
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(BM_CensusKOut)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

// the cubic oracle, for the gap the production kernel buys
void BM_CensusKOutNaive(benchmark::State& state) {
  const auto g = kout_fixture(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    const auto r = tdl::count_kout_naive(g);
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(BM_CensusKOutNaive)->Arg(16)->Arg(32)->Arg(64);

void BM_CensusRegular(benchmark::State& state) {
  tdl::Rng rng(77);
  const auto g = tdl::sample_regular(static_cast<int>(state.range(0)), 3, rng);
  for (auto _ : state) {
    const auto r = tdl::count_undirected(g, {false});
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(BM_CensusRegular)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LemmaSuite(benchmark::State& state) {
  const auto g = kout_fixture(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    const auto r = tdl::count_kout(g, {false});
    benchmark::DoNotOptimize(tdl::occupancy_violations(r, 3, tdl::Ensemble::k_out).empty());
  }
}
BENCHMARK(BM_LemmaSuite)->Arg(256)->Arg(1024);

void BM_SampleKOut(benchmark::State& state) {
  tdl::Rng rng(99);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tdl::sample_kout(n, 3, rng).num_links());
}
BENCHMARK(BM_SampleKOut)->Arg(1000)->Arg(10000);

void BM_SampleGeneral(benchmark::State& state) {
  tdl::Rng rng(99);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tdl::sample_general(n, 3, rng).num_edges());
}
BENCHMARK(BM_SampleGeneral)->Arg(1000)->Arg(10000);

// pairing model with whole restarts; the retry tax is part of the cost
void BM_SampleRegular(benchmark::State& state) {
  tdl::Rng rng(99);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tdl::sample_regular(n, 3, rng).num_edges());
}
BENCHMARK(BM_SampleRegular)->Arg(1000)->Arg(10000);

void BM_EnumerateKOut(benchmark::State& state) {
  for (auto _ : state) {
    auto cur = tdl::enumerate({tdl::Ensemble::k_out, 4, 2, 0});
    std::uint64_t seen = 0;
    while (cur.next()) ++seen;
    benchmark::DoNotOptimize(seen);
  }
}
BENCHMARK(BM_EnumerateKOut);

}  // namespace

BENCHMARK_MAIN();
