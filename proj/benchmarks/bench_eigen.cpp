#include <benchmark/benchmark.h>

#include "ngspread/eigen.hpp"
#include "ngspread/rng.hpp"

using namespace ngspread;

static void BM_FullSpectrum(benchmark::State& state) {
    Rng rng(42);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    SymMatrix m = adjacency_matrix(g);
    for (auto _ : state) {
        Spectrum s = full_spectrum(m);
        benchmark::DoNotOptimize(s.values.data());
    }
}
BENCHMARK(BM_FullSpectrum)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_ExtremeEigenvaluesOnly(benchmark::State& state) {
    Rng rng(42);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    SymMatrix m = signless_laplacian(g);
    for (auto _ : state) {
        auto extremes = extreme_eigenvalues(m);
        benchmark::DoNotOptimize(extremes);
    }
}
BENCHMARK(BM_ExtremeEigenvaluesOnly)->Arg(7)->Arg(8)->Arg(16)->Arg(64);

static void BM_PrincipalPairNonneg(benchmark::State& state) {
    Rng rng(7);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    SymMatrix m = adjacency_matrix(g);
    for (auto _ : state) {
        EigenPair p = principal_pair(m, true);
        benchmark::DoNotOptimize(p.value);
    }
}
BENCHMARK(BM_PrincipalPairNonneg)->Arg(10)->Arg(32);

BENCHMARK_MAIN();
