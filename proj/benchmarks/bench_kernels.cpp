#include <benchmark/benchmark.h>

#include "slspec/kernels.hpp"
#include "slspec/potential.hpp"

namespace {

sl::Potential bench_sigma(std::size_t cells) {
  return sl::sampled_potential(sl::Grid(cells),
                               [](double x) { return 0.4 * std::cos(x); });
}

void BM_kernel_seed(benchmark::State& state) {
  const auto sigma = bench_sigma(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sl::kernel_seed(sigma));
}
BENCHMARK(BM_kernel_seed)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_picard_step(benchmark::State& state) {
  const auto sigma = bench_sigma(static_cast<std::size_t>(state.range(0)));
  const auto seed = sl::kernel_seed(sigma);
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::picard_step(seed, sigma));
}
BENCHMARK(BM_picard_step)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_build_kernels(benchmark::State& state) {
  const auto sigma = bench_sigma(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sl::build_kernels(sigma, 1e-8));
}
BENCHMARK(BM_build_kernels)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
