#include <benchmark/benchmark.h>

#include "ngspread/rng.hpp"
#include "ngspread/search.hpp"

using namespace ngspread;

static void BM_ExhaustiveNg(benchmark::State& state) {
    ScanOptions options;
    options.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        MaximizerSet r = exhaustive_ng(static_cast<int>(state.range(0)), options);
        benchmark::DoNotOptimize(r.best_value);
    }
}
BENCHMARK(BM_ExhaustiveNg)->Args({5, 1})->Args({6, 1})->Args({6, 2})->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveQspread(benchmark::State& state) {
    for (auto _ : state) {
        QSpreadExtremes r = exhaustive_qspread(static_cast<int>(state.range(0)), 1);
        benchmark::DoNotOptimize(r.maximizers.best_value);
    }
}
BENCHMARK(BM_ExhaustiveQspread)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
    Rng rng(5);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        CanonicalForm f = canonical_form(g);
        benchmark::DoNotOptimize(f.bits);
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

static void BM_CanonicalFormCompleteSplit(benchmark::State& state) {
    // automorphism-rich worst-ish case at the size cap
    Graph g = complete_split(10, 3);
    for (auto _ : state) {
        CanonicalForm f = canonical_form(g);
        benchmark::DoNotOptimize(f.bits);
    }
}
BENCHMARK(BM_CanonicalFormCompleteSplit);

static void BM_ImprovingToggle(benchmark::State& state) {
    Rng rng(11);
    Graph g = random_connected_graph(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) {
        ToggleDecision d = improving_toggle(g, Objective::qspread);
        benchmark::DoNotOptimize(d.score);
    }
}
BENCHMARK(BM_ImprovingToggle)->Arg(10)->Arg(20);
