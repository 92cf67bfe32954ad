#include <benchmark/benchmark.h>

#include "slspec/forward.hpp"
#include "slspec/inverse.hpp"
#include "slspec/potential.hpp"

namespace {

sl::TwoSheetData bench_data(std::size_t N) {
  const auto sigma = sl::constant_potential(sl::Grid(200), 0.5);
  return sl::with_model_sheet(sl::forward_spectral_data(sigma, 0.0, N));
}

void BM_build_main_system(benchmark::State& state) {
  const auto data = bench_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::build_main_system(1.5, data));
}
BENCHMARK(BM_build_main_system)->Arg(20)->Arg(40);

void BM_solve_main_equation(benchmark::State& state) {
  const auto data = bench_data(static_cast<std::size_t>(state.range(0)));
  const sl::Grid grid(200);
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::solve_main_equation(grid, data));
}
BENCHMARK(BM_solve_main_equation)
    ->Arg(20)
    ->Arg(40)
    ->Unit(benchmark::kMillisecond);

void BM_recover_potential(benchmark::State& state) {
  const auto data = bench_data(static_cast<std::size_t>(state.range(0)));
  const sl::Grid grid(200);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        sl::recover_potential(data.measured, grid));
}
BENCHMARK(BM_recover_potential)
    ->Arg(20)
    ->Arg(40)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
