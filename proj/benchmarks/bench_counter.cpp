#include <benchmark/benchmark.h>

#include "singline/counter.hpp"
#include "singline/oracles.hpp"
#include "singline/sym_powers.hpp"

using namespace singline;

static void RingProduct(benchmark::State& state) {
    const CohClass a = CohClass::constant(3) - s1() + (s11() - s2()) / 2 + s21() / 6;
    const CohClass b = one() - s1() + (s11() + s2()) / 2 - s21() / 3 + s22() / 12;
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(RingProduct);

static void SymDirect(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ch_sym_direct(state.range(0)));
    }
}
BENCHMARK(SymDirect)->Arg(5)->Arg(60);

static void SymAdams(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ch_sym_adams(state.range(0)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SymAdams)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void CountPipeline(benchmark::State& state) {
    const SurfaceQuery q(state.range(0), state.range(0) / 2 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_via_pipeline(q));
    }
}
BENCHMARK(CountPipeline)->Arg(4)->Arg(40)->Arg(400);

static void CountClosedForm(benchmark::State& state) {
    const SurfaceQuery q(state.range(0), state.range(0) / 2 + 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_closed_form(q));
    }
}
BENCHMARK(CountClosedForm)->Arg(4)->Arg(40)->Arg(400);

static void CountLocalization(benchmark::State& state) {
    const long d = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_by_localization(d, d / 2 + 1));
    }
    state.SetComplexityN(d);
}
BENCHMARK(CountLocalization)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void TableGrid(benchmark::State& state) {
    const long dmax = state.range(0);
    for (auto _ : state) {
        for (long d = 1; d <= dmax; ++d) {
            for (long k = 1; k <= d; ++k) {
                benchmark::DoNotOptimize(count_via_pipeline(SurfaceQuery(d, k)));
            }
        }
    }
}
BENCHMARK(TableGrid)->Arg(7)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
