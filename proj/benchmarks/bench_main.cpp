#include <benchmark/benchmark.h>

#include "mvz/counting.hpp"
#include "mvz/euler_factor.hpp"
#include "mvz/polyhedra.hpp"
#include "mvz/toric.hpp"

using namespace mvz;

static void BM_FactorizeW3(benchmark::State& state) {
  const SparseSeries w = presentation_An(3).presentation.W;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorize(w, n));
}
BENCHMARK(BM_FactorizeW3)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_RestrictedPresentation(benchmark::State& state) {
  const ToricMatrix a = matrix_An(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(restricted_presentation(a));
}
BENCHMARK(BM_RestrictedPresentation)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DualVertices(benchmark::State& state) {
  const Presentation p = presentation_An(static_cast<unsigned>(state.range(0))).presentation;
  std::vector<ExponentVector> pts;
  for (const auto& [nu, c] : p.K) pts.push_back(nu);
  for (const auto& [nu, c] : p.W.terms()) {
    if (!nu.is_zero()) pts.push_back(nu);
  }
  const PointSet i = PointSet::from(p.nvars, pts);
  for (auto _ : state) benchmark::DoNotOptimize(dual(i, {static_cast<unsigned>(state.range(1))}));
}
BENCHMARK(BM_DualVertices)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
  const auto t = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nth_power_census(3, t, {static_cast<unsigned>(state.range(1))}));
}
BENCHMARK(BM_Census)->Args({1000, 1})->Args({1000, 4})->Args({3000, 1})->Unit(benchmark::kMillisecond);

static void BM_BoxCountA3(benchmark::State& state) {
  const ToricMatrix a = matrix_An(3);
  const auto b = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(box_count(a, {{b, b, b, b}}));
}
BENCHMARK(BM_BoxCountA3)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_HAlphaA4(benchmark::State& state) {
  const AnData an = presentation_An(4);
  for (auto _ : state) benchmark::DoNotOptimize(H_alpha_value(an.presentation, an.alpha_star, state.range(0)));
}
BENCHMARK(BM_HAlphaA4)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
