#include <benchmark/benchmark.h>

#include "arcstab/action.hpp"
#include "arcstab/snf.hpp"
#include "arcstab/stability.hpp"

using namespace arcstab;

namespace {

LaurentSeries dense_series(int terms, int lead)
{
    std::string text;
    for (int i = 0; i < terms; ++i) {
        text += (i ? " + " : "") + std::to_string(i % 5 + 1) + "*z^" + std::to_string(lead + i);
    }
    return parse_series(text);
}

// Upper unitriangular times diag(z^e) times lower unitriangular.
ArcMatrix sample_arc(std::size_t m)
{
    std::vector<LaurentSeries> u(m * m);
    std::vector<LaurentSeries> l(m * m);
    std::vector<std::int64_t> e(m);
    for (std::size_t i = 0; i < m; ++i) {
        e[i] = static_cast<std::int64_t>(i % 3) - 1;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) {
                u[i * m + j] = LaurentSeries::one();
                l[i * m + j] = LaurentSeries::one();
            } else if (i < j) {
                u[i * m + j] = dense_series(2, static_cast<int>(j - i));
            } else {
                l[i * m + j] = dense_series(2, 0);
            }
        }
    }
    return compose(compose(ArcMatrix::unchecked(m, u), from_cocharacter(e)), ArcMatrix::unchecked(m, l));
}

void BM_SeriesMultiply(benchmark::State& state)
{
    const auto a = dense_series(static_cast<int>(state.range(0)), -2);
    const auto b = dense_series(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(4)->Arg(16)->Arg(32);

void BM_SeriesInverse(benchmark::State& state)
{
    const auto a = dense_series(6, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.inverse(static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state)
{
    const auto a = sample_arc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinant(a));
    }
}
BENCHMARK(BM_Determinant)->DenseRange(2, 5);

void BM_Snf(benchmark::State& state)
{
    const auto a = sample_arc(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(snf(a));
    }
}
BENCHMARK(BM_Snf)->DenseRange(2, 5);

void BM_ActOnSym(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto rep = RepExpr::sym(k, RepExpr::std_rep(3));
    RepVector::Coords c;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        c[i] = GaussianRational(static_cast<long>(i % 4) + 1);
    }
    const RepVector v(rep, c);
    const auto a = sample_arc(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(act(a, v));
    }
}
BENCHMARK(BM_ActOnSym)->Arg(2)->Arg(3)->Arg(4);

void BM_ReducedNormRank2(benchmark::State& state)
{
    const auto rep = RepExpr::sym(static_cast<std::size_t>(state.range(0)), RepExpr::std_rep(2));
    RepVector::Coords c;
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        c[i] = GaussianRational(1);
    }
    const Pair p(RepVector(rep, c), RepVector(rep, c));
    const auto d = norm_data(from_cocharacter(std::vector<std::int64_t>{2, -1}), p, TorusData::diagonal(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_norm(d));
    }
}
BENCHMARK(BM_ReducedNormRank2)->Arg(2)->Arg(4)->Arg(6);

} // namespace
BENCHMARK_MAIN();
