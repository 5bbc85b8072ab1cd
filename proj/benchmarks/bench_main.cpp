#include <benchmark/benchmark.h>

#include "hookforge/fock.hpp"
#include "hookforge/hook_census.hpp"
#include "hookforge/identities.hpp"
#include "hookforge/plane_partitions.hpp"

using namespace hookforge;

namespace {

void BM_HookProduct(benchmark::State& state) {
  const Partition lambda{5, 4, 3, 2, 1};
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series::internal_hook_product(lambda, cap));
}
BENCHMARK(BM_HookProduct)->DenseRange(6, 12, 2);

void BM_SeriesSquare(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  const auto s = series::external_hook_product(Partition{}, cap);
  for (auto _ : state) benchmark::DoNotOptimize(s * s);
  state.counters["terms"] = static_cast<double>(s.terms().size());
}
BENCHMARK(BM_SeriesSquare)->DenseRange(4, 8, 2);

void BM_RppEnumeration(benchmark::State& state) {
  const Partition lambda{3, 2, 1};
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    pp::for_each_rpp(lambda, cap, [&](const pp::Filling&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_RppEnumeration)->DenseRange(4, 10, 2);

void BM_SppEnumeration(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    pp::for_each_spp(Partition{2, 1}, cap, [&](const pp::Filling&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SppEnumeration)->DenseRange(4, 8, 2);

void BM_Bessenrodt(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto partitions = partitions_of(size);
  for (auto _ : state) {
    for (const auto& p : partitions) benchmark::DoNotOptimize(census::verify_bessenrodt(p, size));
  }
}
BENCHMARK(BM_Bessenrodt)->DenseRange(6, 12, 3);

void BM_FockIdentity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock::verify_fock_identity(d, 2));
}
BENCHMARK(BM_FockIdentity)->DenseRange(4, 10, 3);

}  // namespace

BENCHMARK_MAIN();
