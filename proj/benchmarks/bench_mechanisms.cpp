#include <benchmark/benchmark.h>

#include <random>

#include "budgetagg/apportionment.hpp"
#include "budgetagg/axioms.hpp"
#include "budgetagg/integral_phantoms.hpp"
#include "budgetagg/phantom_system.hpp"
#include "budgetagg/satgen.hpp"
#include "budgetagg/search.hpp"
#include "fixtures.hpp"

using namespace budgetagg;

namespace {

IntegralProfile random_profile(int n, int m, int b, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, m - 1);
  std::vector<IntegralAllocation> votes;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(m, 0);
    for (int u = 0; u < b; ++u) ++v[pick(rng)];
    votes.emplace_back(std::move(v));
  }
  return IntegralProfile(Instance(n, m, b), std::move(votes));
}

void BM_FractionalIM(benchmark::State& state) {
  const auto p = to_fractional(random_profile(static_cast<int>(state.range(0)), 6, 10, 1));
  for (auto _ : state) benchmark::DoNotOptimize(independent_markets_mechanism(p));
}
BENCHMARK(BM_FractionalIM)->Arg(5)->Arg(20)->Arg(80);

void BM_FloorIM(benchmark::State& state) {
  const auto p = random_profile(static_cast<int>(state.range(0)), 6, 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(floor_im(p));
}
BENCHMARK(BM_FloorIM)->Arg(5)->Arg(20)->Arg(80);

void BM_FloorUtil(benchmark::State& state) {
  const auto p = random_profile(static_cast<int>(state.range(0)), 6, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(floor_util(p));
}
BENCHMARK(BM_FloorUtil)->Arg(5)->Arg(20);

void BM_HamiltonTies(benchmark::State& state) {
  const Rat e(8, 15);
  const FractionalAllocation a(std::vector<Rat>{Rat(16, 3), e, e, e, e, e});
  for (auto _ : state) benchmark::DoNotOptimize(hamilton(a));
}
BENCHMARK(BM_HamiltonTies);

void BM_JrOutcomes(benchmark::State& state) {
  const auto p = fixtures::s032_profile();
  for (auto _ : state) benchmark::DoNotOptimize(jr_outcomes(p));
}
BENCHMARK(BM_JrOutcomes);

void BM_FindManipulation(benchmark::State& state) {
  const Instance inst(2, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_manipulation(floor_im, inst));
}
BENCHMARK(BM_FindManipulation)->Unit(benchmark::kMillisecond);

void BM_EncodeSat(benchmark::State& state) {
  const Instance inst(static_cast<int>(state.range(0)), 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(encode(inst));
}
BENCHMARK(BM_EncodeSat)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
