#include <benchmark/benchmark.h>

#include "ngspread/graphon.hpp"
#include "ngspread/rng.hpp"

using namespace ngspread;

namespace {

StepKernel random_kernel(int k, Rng& rng) {
    std::vector<double> m(k);
    double sum = 0.0;
    for (double& mi : m) {
        mi = 0.05 + rng.uniform();
        sum += mi;
    }
    for (double& mi : m) mi /= sum;
    std::vector<std::vector<double>> values(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) values[i][j] = values[j][i] = 2.0 * rng.uniform() - 1.0;
    return StepKernel{std::move(m), std::move(values)};
}

} // namespace

static void BM_CutNormExact(benchmark::State& state) {
    Rng rng(3);
    StepKernel k = random_kernel(static_cast<int>(state.range(0)), rng);
    int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) {
        CutNormResult r = cut_norm(k, jobs);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_CutNormExact)
    ->Args({12, 1})
    ->Args({16, 1})
    ->Args({20, 1})
    ->Args({20, 2})
    ->Unit(benchmark::kMillisecond);

static void BM_MaxEigen(benchmark::State& state) {
    Rng rng(9);
    Graph g = random_graph(static_cast<int>(state.range(0)), rng);
    StepGraphon w = from_graph(g);
    for (auto _ : state) {
        GraphonEigen e = max_eigen(w);
        benchmark::DoNotOptimize(e.mu);
    }
}
BENCHMARK(BM_MaxEigen)->Arg(16)->Arg(64);

static void BM_DeltaCutUpper(benchmark::State& state) {
    StepGraphon u = from_graph(complete_split(static_cast<int>(state.range(0)),
                                              static_cast<int>(state.range(0)) / 3));
    StepGraphon w = limit_split_graphon();
    for (auto _ : state) {
        DeltaUpperResult d = delta_cut_upper(u, w);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DeltaCutUpper)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
