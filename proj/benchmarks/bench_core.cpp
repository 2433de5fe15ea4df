#include <benchmark/benchmark.h>

#include <random>

#include "workbench/f2.hpp"
#include "workbench/perm.hpp"
#include "workbench/quillen.hpp"
#include "workbench/series.hpp"
#include "workbench/unstable.hpp"

using namespace workbench;

namespace {

F2Matrix random_matrix(std::size_t rows, std::size_t cols, uint64_t seed) {
    std::mt19937_64 rng(seed);
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

void BM_rank(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    F2Matrix m = random_matrix(n, n, 42);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rank)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_kernel(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    F2Matrix m = random_matrix(n / 2, n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_kernel)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_group_enumeration(benchmark::State& state) {
    std::size_t n = std::size_t(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sylow_symmetric(n).order());
}
BENCHMARK(BM_group_enumeration)->Arg(8)->Arg(16);

void BM_quadratic_construction(benchmark::State& state) {
    int depth = int(state.range(0));
    for (auto _ : state) {
        TruncatedUnstableModule m = sylow_p_module(10);
        for (int k = 2; k <= depth; ++k) m = quadratic_p_decorated(m);
        benchmark::DoNotOptimize(m.dim(10));
    }
}
BENCHMARK(BM_quadratic_construction)->Arg(2)->Arg(3);

void BM_series_pipeline(benchmark::State& state) {
    int m = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(series_sylow_alt_pipeline(m, 24).a[10]);
}
BENCHMARK(BM_series_pipeline)->Arg(3)->Arg(6);

void BM_quillen_limit(benchmark::State& state) {
    auto g = std::make_shared<const FiniteGroup>(sylow_symmetric(8));
    QuillenDiagram diagram = build_quillen_diagram(g, DiagramMode::Skeleton);
    for (auto _ : state) benchmark::DoNotOptimize(limit_dims(diagram, int(state.range(0)), "", false).dims);
}
BENCHMARK(BM_quillen_limit)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
