#include <benchmark/benchmark.h>

#include "slspec/forward.hpp"
#include "slspec/potential.hpp"

namespace {

sl::Potential bench_sigma(std::size_t cells) {
  return sl::sampled_potential(sl::Grid(cells), [](double x) {
    return 0.3 * std::sin(x) + 0.2;
  });
}

void BM_characteristic(benchmark::State& state) {
  const auto sigma = bench_sigma(static_cast<std::size_t>(state.range(0)));
  double lam = 7.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::characteristic(sigma, 0.2, lam));
    lam += 1e-9;  // defeat value caching across iterations
  }
}
BENCHMARK(BM_characteristic)->Arg(200)->Arg(400);

void BM_eigenvalues(benchmark::State& state) {
  const auto sigma = bench_sigma(200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sl::eigenvalues(sigma, 0.2, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_eigenvalues)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_forward_data(benchmark::State& state) {
  const auto sigma = bench_sigma(200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl::forward_spectral_data(
        sigma, 0.2, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_forward_data)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
