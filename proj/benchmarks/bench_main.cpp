#include "darmonlab/darmon.hpp"
#include "darmonlab/formula_compiler.hpp"
#include "darmonlab/local_symbols.hpp"
#include "darmonlab/prescribe.hpp"

#include <benchmark/benchmark.h>

using namespace darmonlab;

static void BM_HilbertSymbolQ(benchmark::State& state) {
  NumberField Q = NumberField::parse("Q");
  Place two = Place::finite(Q.primes_above(2)[0]);
  FieldElement a = Q.from_rational(Rational(-35, 12)), b = Q.from_rational(Rational(22, 9));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(a, b, two));
}
BENCHMARK(BM_HilbertSymbolQ);

static void BM_DeltaQuadratic(benchmark::State& state) {
  NumberField K = NumberField::parse(state.range(0) ? "Q(sqrt,-5)" : "Q(sqrt,2)");
  FieldElement a = parse_element(K, "[7,3]"), b = parse_element(K, "[-11,2]");
  for (auto _ : state) benchmark::DoNotOptimize(delta(a, b));
}
BENCHMARK(BM_DeltaQuadratic)->Arg(0)->Arg(1);

static void BM_RealizeFinite(benchmark::State& state) {
  NumberField K = NumberField::parse("Q");
  PlaceSet S;
  for (long p : {3, 5, 7, 11, 13, 17})
    if (long(S.size()) < state.range(0)) S.push_back(Place::finite(K.primes_above(p)[0]));
  for (auto _ : state) benchmark::DoNotOptimize(realize_finite(K, S));
}
BENCHMARK(BM_RealizeFinite)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_InDarmon(benchmark::State& state) {
  NumberField Q = NumberField::parse("Q");
  FieldElement r = Q.from_rational(Rational(3125, 7776));
  for (auto _ : state) benchmark::DoNotOptimize(in_darmon(r, {}, Weight::finite(5)));
}
BENCHMARK(BM_InDarmon);

static void BM_MainBudget(benchmark::State& state) {
  NumberField Q = NumberField::parse("Q");
  for (auto _ : state) benchmark::DoNotOptimize(main_budget(Q, 10));
}
BENCHMARK(BM_MainBudget)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
