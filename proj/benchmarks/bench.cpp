#include <benchmark/benchmark.h>

#include "cyclic/cyclic.hpp"

namespace {

using namespace cyclic;

void BM_StationaryVector(benchmark::State& state) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 7 5 6 8 3)"));
  for (auto _ : state) benchmark::DoNotOptimize(stationary_vector(a));
}
BENCHMARK(BM_StationaryVector);

void BM_MatrixPower(benchmark::State& state) {
  const auto a = transition_matrix(Cycle::parse("(1 2 4 7 5 6 8 3)"));
  for (auto _ : state)
    benchmark::DoNotOptimize(matrix_power(a, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_MatrixPower)->Arg(8)->Arg(64)->Arg(512);

void BM_EnumerateOrbits(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(q, 3));
}
BENCHMARK(BM_EnumerateOrbits)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EnumerateTypes(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(q));
}
BENCHMARK(BM_EnumerateTypes)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RealizeGeneral(benchmark::State& state) {
  const Cycle sigma = Cycle::parse("(1 2 5 6 3 4)");
  const FixVector fix{{0, 1, 0, 1, 0, 2}, 1};
  for (auto _ : state) benchmark::DoNotOptimize(realize_general(sigma, 5, fix));
}
BENCHMARK(BM_RealizeGeneral);

}  // namespace
BENCHMARK_MAIN();
