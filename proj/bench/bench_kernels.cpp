// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "cmc/cmcurves.hpp"
#include "cmc/kernels.hpp"
#include "cmc/module_gb.hpp"
#include "cmc/properties.hpp"

namespace {

using namespace cmc;

const RingPtr& ring() {
    static const RingPtr R = Ring::make(Field::prime(32003), {"x", "y", "z", "w"});
    return R;
}

PolyMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PolyMatrix M(ring(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) M(i, j) = random_form(ring(), 1 + (i + j) % 2, rng, 3);
    return M;
}

ScalarMatrix random_scalars(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Field& F = ring()->field();
    ScalarMatrix M(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) = random_scalar(F, rng);
    return M;
}

std::vector<gb::Vec> random_ideal(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<gb::Vec> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(gb::from_polynomial(random_form(ring(), 2 + k % 2, rng, 4)));
    return gens;
}

template <bool Parallel>
void BM_matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto A = random_matrix(n, n, 1), B = random_matrix(n, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(Parallel ? kernels::matmul(A, B) : kernels::serial::matmul(A, B));
}

template <bool Parallel>
void BM_minors(benchmark::State& state) {
    const auto cols = static_cast<std::size_t>(state.range(0));
    auto M = random_matrix(3, cols, 3);
    for (auto _ : state) benchmark::DoNotOptimize(Parallel ? kernels::minors(M, 3) : kernels::serial::minors(M, 3));
}

template <bool Parallel>
void BM_row_reduce(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto base = random_scalars(n, 4);
    for (auto _ : state) {
        auto M = base;
        benchmark::DoNotOptimize(Parallel ? kernels::row_reduce(M) : kernels::serial::row_reduce(M));
    }
}

template <bool Parallel>
void BM_buchberger(benchmark::State& state) {
    auto gens = random_ideal(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        if (Parallel)
            benchmark::DoNotOptimize(gb::buchberger(ring(), gens));
        else
            benchmark::DoNotOptimize(gb::buchberger_serial(ring(), gens));
    }
}

} // namespace

BENCHMARK(BM_matmul<true>)->Arg(4)->Arg(8);
BENCHMARK(BM_matmul<false>)->Arg(4)->Arg(8);
BENCHMARK(BM_minors<true>)->Arg(6)->Arg(9);
BENCHMARK(BM_minors<false>)->Arg(6)->Arg(9);
BENCHMARK(BM_row_reduce<true>)->Arg(32)->Arg(96);
BENCHMARK(BM_row_reduce<false>)->Arg(32)->Arg(96);
BENCHMARK(BM_buchberger<true>)->Arg(1)->Arg(2);
BENCHMARK(BM_buchberger<false>)->Arg(1)->Arg(2);

BENCHMARK_MAIN();
