#include <benchmark/benchmark.h>

#include "zigzag/andre.hpp"
#include "zigzag/cfrac.hpp"
#include "zigzag/entringer.hpp"
#include "zigzag/jacobi.hpp"
#include "zigzag/permutation.hpp"
#include "zigzag/series.hpp"

using namespace zigzag;

static void BM_EnumerateUpDown(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_class(ClassTag::Ascending_any, n));
}
BENCHMARK(BM_EnumerateUpDown)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);

static void BM_WeightPolynomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_weight_poly(ClassTag::D_even, n, StatVariant::interior_valleys));
  }
}
BENCHMARK(BM_WeightPolynomial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_JacobiTaylor(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_taylor(n));
}
BENCHMARK(BM_JacobiTaylor)->RangeMultiplier(2)->Range(4, 32);

static void BM_Triangle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangle(n));
}
BENCHMARK(BM_Triangle)->Arg(5)->Arg(50)->Arg(200);

static void BM_AndreRecurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a_recurrence(n));
}
BENCHMARK(BM_AndreRecurrence)->Arg(20)->Arg(100)->Arg(300);

static void BM_Convergent(benchmark::State& state) {
  const CfScheme s = *find_builtin_scheme("elliptic-paper");
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cf_convergent_series(s, d, 2 * d + 4));
}
BENCHMARK(BM_Convergent)->DenseRange(2, 12, 2);

static void BM_SeriesMul(benchmark::State& state) {
  const JacobiSeries js = as_series(jacobi_taylor(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(js.cn, js.dn));
}
BENCHMARK(BM_SeriesMul)->Arg(5)->Arg(10)->Arg(20);

BENCHMARK_MAIN();
