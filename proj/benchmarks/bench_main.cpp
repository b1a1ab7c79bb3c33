#include "affk/core.hpp"
#include "affk/families.hpp"
#include "affk/kostka.hpp"
#include "affk/pieri.hpp"
#include "affk/strips.hpp"
#include "affk/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace affk;

static void BM_StripEnumeration(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const auto cores = cores_up_to(12, k);
    for (auto _ : state)
        for (const Core& beta : cores)
            for (int r = 1; r <= k; ++r) benchmark::DoNotOptimize(enumerate_sv_strips(beta, r));
    state.counters["cores"] = static_cast<double>(cores.size());
}
BENCHMARK(BM_StripEnumeration)->Arg(2)->Arg(3)->Arg(4);

static void BM_TableauChains(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_tableaux(Partition{2, 1, 1}, Composition(7, 1), 2));
}
BENCHMARK(BM_TableauChains);

static void BM_AffineKostkaBuild(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_affine_kostka(k, n));
}
BENCHMARK(BM_AffineKostkaBuild)->Args({2, 6})->Args({3, 6})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_KKSchurSolve(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    affine_kostka(k, n);
    for (auto _ : state)
        for (const Partition& lambda : partitions_of(n, k)) benchmark::DoNotOptimize(k_K_schur(lambda, k));
}
BENCHMARK(BM_KKSchurSolve)->Args({3, 6})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_RowPieri(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(row_pieri(Partition{3, 2, 1}, 2, 3));
}
BENCHMARK(BM_RowPieri);
BENCHMARK_MAIN();
