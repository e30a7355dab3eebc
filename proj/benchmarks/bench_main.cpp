#include <benchmark/benchmark.h>

#include "cadef/contraction/contraction.hpp"
#include "cadef/hochschild/hochschild.hpp"
#include "cadef/wedderburn/factor.hpp"

using namespace cadef;

static void BM_Completion(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) {
    Presentation p = d_presentation(n, n);
    benchmark::DoNotOptimize(p.completed().rules().size());
  }
}
BENCHMARK(BM_Completion)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Centre(benchmark::State& state) {
  FDAlgebra A = d_presentation(int(state.range(0)), int(state.range(0))).algebra();
  for (auto _ : state) benchmark::DoNotOptimize(centre(A).dim());
  state.SetLabel("dim " + std::to_string(A.dim()));
}
BENCHMARK(BM_Centre)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Radical(benchmark::State& state) {
  FDAlgebra A = d_presentation(int(state.range(0)), 2).algebra();
  for (auto _ : state) benchmark::DoNotOptimize(radical(A).dim());
}
BENCHMARK(BM_Radical)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Factor(benchmark::State& state) {
  // prod_{i=1}^{k} (t^2 - i): every factor irreducible or linear.
  UniPoly p(1);
  for (int i = 1; i <= state.range(0); ++i) p *= UniPoly(std::vector<Rational>{Rational(-i), 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(factor_poly_rational(p).factors.size());
}
BENCHMARK(BM_Factor)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

static void BM_Certificate(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d_certificate(n, n).verified());
}
BENCHMARK(BM_Certificate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Reproduce(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 2; n <= 4; ++n)
      for (int m = 2; m <= 4; ++m) benchmark::DoNotOptimize(reproduce(ContractionSpec::d(n, m)).ok());
}
BENCHMARK(BM_Reproduce)->Unit(benchmark::kMillisecond);

static void BM_Hochschild(benchmark::State& state) {
  FDAlgebra A = state.range(0) == 0 ? d_presentation(2, 2).algebra() : d_presentation(3, 2).algebra();
  HochschildOptions opts;
  opts.reduced = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_dims(A, 2, opts).dims);
  state.SetLabel(std::string(state.range(0) ? "D(3,2)" : "D(2,2)") + (opts.reduced ? " normalized" : " standard"));
}
BENCHMARK(BM_Hochschild)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
