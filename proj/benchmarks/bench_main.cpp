#include <benchmark/benchmark.h>

#include <vector>

#include "beurling/beltrami.hpp"
#include "beurling/morrey.hpp"
#include "beurling/samplers.hpp"
#include "beurling/transforms.hpp"
#include "beurling/weights.hpp"

using namespace beurling;

static void BM_BeurlingFft(benchmark::State& state) {
  const GridSpec spec = make_grid(static_cast<int>(state.range(0)), 4.0);
  const ComplexField f = random_bandlimited(spec, 1);
  for (auto _ : state) benchmark::DoNotOptimize(beurling::beurling(f));
}
BENCHMARK(BM_BeurlingFft)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_TruncatedQuadrature(benchmark::State& state) {
  const GridSpec spec = make_grid(static_cast<int>(state.range(0)), 4.0);
  const ComplexField f = random_smooth_complex(spec, 2);
  const double eta = 8.0 * spec.spacing();
  for (auto _ : state) benchmark::DoNotOptimize(beurling_truncated(f, eta));
}
BENCHMARK(BM_TruncatedQuadrature)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_MorreyNorm(benchmark::State& state) {
  const GridSpec spec = make_grid(static_cast<int>(state.range(0)), 4.0);
  const ComplexField f = random_smooth_complex(spec, 3);
  const Weight w = power_weight(spec, 0.5, complex(0.0, 0.0), 2.0);
  const MorreyParams params(2.0, 0.5);
  const SquareFamily family = dyadic_family(spec, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(morrey_norm(f, w, params, family));
}
BENCHMARK(BM_MorreyNorm)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_NeumannSolve(benchmark::State& state) {
  const GridSpec spec = make_grid(static_cast<int>(state.range(0)), 4.0);
  const ComplexField b =
      sample(spec, [](complex z) { return complex(0.5 * compact_bump(z, complex(0.0, 0.0), 1.5), 0.0); });
  const BeltramiProblem problem(b, random_smooth_complex(spec, 4));
  for (auto _ : state) benchmark::DoNotOptimize(solve_beltrami(problem, 1e-8, 200));
}
BENCHMARK(BM_NeumannSolve)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
