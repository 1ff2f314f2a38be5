#include <benchmark/benchmark.h>

#include <revtype/case2.hpp>
#include <revtype/catalog.hpp>
#include <revtype/expression.hpp>
#include <revtype/finite_type.hpp>
#include <revtype/verification.hpp>

namespace {

using namespace revtype;

void BM_EvalJet3(benchmark::State& state) {
  const Expr e = parse("c*asinh(s/c) + sqrt(c^2+s^2)*sin(s)", ParamMap{{"c", 1.5}});
  const ParamMap params{{"c", 1.5}};
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_jet3(e, s, params));
    s += 1e-9;
  }
}
BENCHMARK(BM_EvalJet3);

void BM_ProfileJets(benchmark::State& state) {
  const ProfileCurve p = torus(3, 1).profile;
  for (auto _ : state) benchmark::DoNotOptimize(profile_jets(p, 0.7));
}
BENCHMARK(BM_ProfileJets);

void BM_FitMatrixTorus(benchmark::State& state) {
  const ProfileCurve p = torus(3, 1).profile;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fit_matrix(p, {n, n}));
}
BENCHMARK(BM_FitMatrixTorus)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_FormulaEquivalence(benchmark::State& state) {
  const ProfileCurve p = sphere(1).profile;
  for (auto _ : state) benchmark::DoNotOptimize(check_formula_equivalence(p, 1000, 1, 1e-8));
}
BENCHMARK(BM_FormulaEquivalence)->Unit(benchmark::kMillisecond);

void BM_Case2Scan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(case2_scan({}));
}
BENCHMARK(BM_Case2Scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
