#include <benchmark/benchmark.h>

#include "enhadhm/constructions.hpp"
#include "enhadhm/deformation.hpp"
#include "enhadhm/stability.hpp"

#include <random>

using namespace enhadhm;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long>(rng() % 11) - 5;
    return m;
}

EnhancedRep vdm(std::size_t r, std::size_t c)
{
    VandermondeParams params{r, c, {}};
    for (std::size_t i = 0; i < c; ++i)
        params.lambdas.push_back(Rational(static_cast<long>(i) + 1));
    return vandermonde_rep(params);
}

} // namespace

static void BM_rank(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    RatMatrix m = random_matrix(rng, n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_kernel(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    RatMatrix m = random_matrix(rng, n / 2, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_krylov_closure(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    RatMatrix a = random_matrix(rng, n, n);
    RatMatrix b = random_matrix(rng, n, n);
    Subspace seed = Subspace::span_of(random_matrix(rng, n, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(krylov_closure(a, b, seed));
}
BENCHMARK(BM_krylov_closure)->Arg(4)->Arg(8)->Arg(12);

static void BM_deformation_cohomology(benchmark::State& state)
{
    EnhancedRep x = vdm(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        ChainComplex complex = deformation_complex(x);
        benchmark::DoNotOptimize(cohomology(complex));
    }
}
BENCHMARK(BM_deformation_cohomology)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_lift_solve(benchmark::State& state)
{
    std::size_t m = static_cast<std::size_t>(state.range(0));
    AdhmRep base = AdhmRep::zero(1, m);
    for (std::size_t i = 0; i < m; ++i) {
        base.A.at(i, i) = static_cast<long>(i) + 1;
        base.B.at(i, i) = static_cast<long>(i) + 1;
        base.I.at(i, 0) = 1;
    }
    RatMatrix aprime = RatMatrix::identity(2);
    RatMatrix bprime = RatMatrix::identity(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(lift_solve(base, aprime, bprime));
}
BENCHMARK(BM_lift_solve)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
