// Microbenchmarks for the O(N^2) principal-value kernel core.
// CSV emission: run with --benchmark_format=csv; the counters column carries
// n, nodes, ns_per_eval.

#include <benchmark/benchmark.h>

#include <cmath>

#include "muskat/kernels.hpp"
#include "muskat/profiles.hpp"

namespace {

muskat::GridFunction bump_interface(std::size_t n) {
  muskat::BumpProfile bump{1.0, 2.0, 0.0, 0.5};
  return muskat::sample_profile(bump, muskat::HalfPlane{}, 12.8, n);
}

void BM_pv_integral_half_plane(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = bump_interface(n);
  muskat::PvEvaluator eval(muskat::HalfPlane{}, muskat::RhsForm::Primary, f, 12.8);
  const std::size_t offsets = eval.quadrature().count;
  std::size_t node = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.at(node));
    node = (node + 1) % n;
  }
  const double evals =
      static_cast<double>(state.iterations()) * static_cast<double>(offsets);
  state.counters["n"] = static_cast<double>(n);
  state.counters["nodes"] = static_cast<double>(offsets);
  state.counters["ns_per_eval"] =
      benchmark::Counter(evals * 1e-9, benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_pv_integral_half_plane)->RangeMultiplier(2)->Range(128, 1024);

void BM_pv_integral_strip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = bump_interface(n);
  muskat::PvEvaluator eval(muskat::Strip{4.0}, muskat::RhsForm::Primary, f, 12.8);
  const std::size_t offsets = eval.quadrature().count;
  std::size_t node = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.at(node));
    node = (node + 1) % n;
  }
  const double evals =
      static_cast<double>(state.iterations()) * static_cast<double>(offsets);
  state.counters["n"] = static_cast<double>(n);
  state.counters["nodes"] = static_cast<double>(offsets);
  state.counters["ns_per_eval"] =
      benchmark::Counter(evals * 1e-9, benchmark::Counter::kIsRate | benchmark::Counter::kInvert);
}
BENCHMARK(BM_pv_integral_strip)->RangeMultiplier(2)->Range(128, 512);

void BM_theta_kernel(benchmark::State& state) {
  double y = 0.37, r = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(muskat::theta_kernel(y, r, 2.0));
    y += 1e-9;
  }
}
BENCHMARK(BM_theta_kernel);

}  // namespace

BENCHMARK_MAIN();
