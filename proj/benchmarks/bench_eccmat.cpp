#include <benchmark/benchmark.h>

#include "eccmat/canonical.hpp"
#include "eccmat/ecc_matrix.hpp"
#include "eccmat/families.hpp"
#include "eccmat/spectra.hpp"
#include "eccmat/tree_enum.hpp"

static void BM_eccentricity_matrix(benchmark::State& state) {
    auto g = eccmat::path(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(eccmat::eccentricity_matrix(g));
}
BENCHMARK(BM_eccentricity_matrix)->Arg(10)->Arg(20)->Arg(62);

static void BM_jacobi_spectrum(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    auto em = eccmat::eccentricity_matrix(
        eccmat::double_broom(n, 5, (n - 6) / 2, (n - 6) - (n - 6) / 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(eccmat::eigenvalues_symmetric(em));
}
BENCHMARK(BM_jacobi_spectrum)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_perron_pair(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    auto em = eccmat::eccentricity_matrix(
        eccmat::double_broom(n, 5, (n - 6) / 2, (n - 6) - (n - 6) / 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(eccmat::perron_pair(em));
}
BENCHMARK(BM_perron_pair)->Arg(8)->Arg(12)->Arg(16);

static void BM_free_trees(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long count = 0;
        auto stream = eccmat::free_trees(n);
        while (auto g = stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_free_trees)->Arg(10)->Arg(12)->Arg(14);

static void BM_ahu_canonical(benchmark::State& state) {
    auto g = eccmat::spider_h(4, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(eccmat::ahu_canonical(g));
}
BENCHMARK(BM_ahu_canonical);

BENCHMARK_MAIN();
