#include <benchmark/benchmark.h>

#include <random>

#include "aes/kernels.hpp"
#include "aes/moments.hpp"
#include "aes/zoo.hpp"

using namespace aes;

namespace {

ComplexMatrix random_matrix(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
    return m;
}

template <bool Parallel>
void BM_matmul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix a = random_matrix(n, 1), b = random_matrix(n, 2);
    ComplexMatrix c;
    for (auto _ : state) {
        if constexpr (Parallel) kernels::matmul(a, b, c);
        else kernels::matmul_serial(a, b, c);
        benchmark::DoNotOptimize(c.data());
    }
    state.SetItemsProcessed(state.iterations() * 8LL * n * n * n);
}

template <bool Parallel>
void BM_matvec(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix a = random_matrix(n, 3);
    std::vector<cplx> x(n, cplx(1.0, -0.5)), y;
    for (auto _ : state) {
        if constexpr (Parallel) kernels::matvec(a, x, y);
        else kernels::matvec_serial(a, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

template <bool Parallel>
void BM_husimi(benchmark::State& state) {
    const StateBundle b = cat_sdz({{1.2, 0.3}, 1.0, 0.0}, {0.5, 0.7}, {0.4, -0.2});
    Grid g = husimi_grid(b.fock, 8.0 / static_cast<double>(state.range(0)));
    for (auto _ : state) {
        Field f = Parallel ? husimi_q(b.fock, g) : husimi_q_serial(b.fock, g);
        benchmark::DoNotOptimize(f.values.data());
    }
    state.counters["points"] = static_cast<double>(g.nx) * g.ny;
}

}  // namespace

BENCHMARK(BM_matmul<false>)->Name("matmul/serial")->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matmul<true>)->Name("matmul/openmp")->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_matvec<false>)->Name("matvec/serial")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_matvec<true>)->Name("matvec/openmp")->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_husimi<false>)->Name("husimi/serial")->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_husimi<true>)->Name("husimi/openmp")->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
