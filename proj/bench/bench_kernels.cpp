// Serial reference vs OpenMP kernels. Worker count from OMP_NUM_THREADS.

#include "skewhowe/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace skewhowe;

namespace {

Web bench_ladder() {
  return ladder_from_word(3, {2, 1, 2, 1, 2, 1},
                          {{Sign::Minus, 2, 1}, {Sign::Minus, 1, 1}, {Sign::Minus, 4, 1}, {Sign::Minus, 5, 1}});
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_WebMatrixDense(benchmark::State& state) {
  const Web w = bench_ladder();
  for (auto _ : state) benchmark::DoNotOptimize(web_matrix(w, Evaluator::Dense, exec_of(state)));
  label(state);
}

void BM_WebMatrixStateSum(benchmark::State& state) {
  const Web w = bench_ladder();
  for (auto _ : state) benchmark::DoNotOptimize(web_matrix(w, Evaluator::StateSum, exec_of(state)));
  label(state);
}

void BM_AllBlocks(benchmark::State& state) {
  const Shape sh(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(all_blocks(sh, exec_of(state)));
  label(state);
}

void BM_AllCartan(benchmark::State& state) {
  const auto blocks = all_blocks(Shape(2, 3), Exec::Parallel);
  for (auto _ : state) benchmark::DoNotOptimize(all_cartan(blocks, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_WebMatrixDense)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_WebMatrixStateSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AllBlocks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AllCartan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
