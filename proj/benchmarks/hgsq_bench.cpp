#include <benchmark/benchmark.h>

#include "hgsq/closed_forms.hpp"
#include "hgsq/formula.hpp"
#include "hgsq/oracles.hpp"

namespace {

using namespace hgsq;

void BM_SevenPrimeCounts(benchmark::State& state) {
  const SevenPrimeExample ex = seven_prime_example();
  for (auto _ : state) {
    for (const GroupSpec& g : ex.groups) benchmark::DoNotOptimize(count_hgs(ex.groups[0], g));
  }
}
BENCHMARK(BM_SevenPrimeCounts)->Unit(benchmark::kMillisecond);

void BM_CountGroups(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_groups(16309243734ULL));
}
BENCHMARK(BM_CountGroups)->Unit(benchmark::kMillisecond);

void BM_EnumerateGroups(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groups(16309243734ULL).size());
}
BENCHMARK(BM_EnumerateGroups)->Unit(benchmark::kMillisecond);

void BM_CountMatrix(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_matrix(n).cells.size());
}
BENCHMARK(BM_CountMatrix)->Arg(42)->Arg(18205)->Unit(benchmark::kMillisecond);

void BM_EnumerateNh(benchmark::State& state) {
  const GroupSpec d30 = dihedral_group(15);
  const PairContext ctx = build_context(d30, d30);
  const auto predicate = state.range(0) ? QuintuplePredicate::Semantic : QuintuplePredicate::Table;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_Nh(ctx, 0, predicate).count);
  state.SetLabel(state.range(0) ? "semantic" : "table");
}
BENCHMARK(BM_EnumerateNh)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SubgroupCensus(benchmark::State& state) {
  const std::vector<GroupSpec> groups = enumerate_groups(42);
  const GroupSpec& g = groups.back();
  for (auto _ : state) benchmark::DoNotOptimize(regular_subgroup_census(g, g).count);
}
BENCHMARK(BM_SubgroupCensus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
