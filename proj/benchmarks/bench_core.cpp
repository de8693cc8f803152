#include <wps/fan.hpp>
#include <wps/lattice.hpp>
#include <wps/linalg.hpp>
#include <wps/polytope.hpp>

#include <benchmark/benchmark.h>

using namespace wps;

namespace {

const WeightsVector kWeights{2, 3, 4, 15, 25};

void BM_Hnf(benchmark::State& state) {
  const IntMatrix a{{12, -7, 33, 4, 9}, {5, 18, -2, 27, -11}, {-9, 4, 16, 3, 21}, {7, -30, 8, 14, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(hnf(a));
}
BENCHMARK(BM_Hnf);

void BM_CanonicalFan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(canonical_fan(kWeights));
}
BENCHMARK(BM_CanonicalFan);

void BM_RecognizePolytope(benchmark::State& state) {
  auto simplex = polytope_of(kWeights, 2);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_polytope(simplex));
}
BENCHMARK(BM_RecognizePolytope);

void BM_CountPoints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_points(kWeights, state.range(0)));
}
BENCHMARK(BM_CountPoints)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
