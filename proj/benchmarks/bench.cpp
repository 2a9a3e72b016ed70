#include <benchmark/benchmark.h>

#include "grtk/grengine.hpp"

using namespace grtk;

static void bm_enumerate(benchmark::State& state)
{
    Quiver q = build_cycle_quiver("+++--");
    for (auto _ : state) {
        Context ctx(q);
        benchmark::DoNotOptimize(enumerate_indecomposables(ctx, int(state.range(0))));
    }
}
BENCHMARK(bm_enumerate)->Arg(10)->Arg(15)->Arg(20);

static void bm_measures(benchmark::State& state)
{
    Quiver q = build_cycle_quiver("+++--");
    for (auto _ : state) {
        Context ctx(q);
        for (const auto& c : enumerate_indecomposables(ctx, int(state.range(0))))
            benchmark::DoNotOptimize(gr_measure(ctx, c));
    }
}
BENCHMARK(bm_measures)->Arg(10)->Arg(15);

static void bm_mono_test(benchmark::State& state)
{
    Quiver q = build_cycle_quiver("+++--");
    Context ctx(q);
    auto classes = enumerate_indecomposables(ctx, 10);
    for (auto _ : state)
        for (const auto& x : classes)
            for (const auto& y : classes) {
                if (x.length >= y.length) continue;
                MonoEpiOptions opt;
                benchmark::DoNotOptimize(
                    mono_epi_test(class_to_rep(q, x), class_to_rep(q, y), opt)
                        .exists_mono);
            }
}
BENCHMARK(bm_mono_test);

static void bm_partition(benchmark::State& state)
{
    Quiver q = build_cycle_quiver("+++--");
    for (auto _ : state) {
        Context ctx(q);
        benchmark::DoNotOptimize(partition_prefix(ctx, int(state.range(0))));
    }
}
BENCHMARK(bm_partition)->Arg(10)->Arg(15);

BENCHMARK_MAIN();
