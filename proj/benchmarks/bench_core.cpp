#include <benchmark/benchmark.h>

#include <random>

#include "vertexlab/enumerate.hpp"
#include "vertexlab/transfer.hpp"

using namespace vertexlab;

namespace {

Weights16 bench_weights(std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Weights16 wt;
  for (auto& x : wt.w) x = cplx(dist(eng), dist(eng));
  for (auto& x : wt.v) x = cplx(dist(eng), dist(eng));
  return wt;
}

void BM_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto spec = LatticeSpec::homogeneous_lattice(n, n, bench_weights(7));
  for (auto _ : state) benchmark::DoNotOptimize(partition_enumerate(spec));
  state.SetComplexityN(spec.bonds());
}
BENCHMARK(BM_enumerate)->Arg(2)->Arg(3);

void BM_row_transfer(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  auto spec = LatticeSpec::homogeneous_lattice(2, width, bench_weights(8));
  for (auto _ : state) benchmark::DoNotOptimize(row_transfer(spec, 0));
}
BENCHMARK(BM_row_transfer)->DenseRange(4, 8, 2);

void BM_partition_transfer(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  auto spec = LatticeSpec::homogeneous_lattice(64, width, bench_weights(9));
  for (auto _ : state) benchmark::DoNotOptimize(partition_transfer(spec));
}
BENCHMARK(BM_partition_transfer)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
