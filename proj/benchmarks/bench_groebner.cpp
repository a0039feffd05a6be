#include "qcoinv/groebner.hpp"
#include "qcoinv/osp.hpp"
#include "qcoinv/symfunc.hpp"
#include "qcoinv/verify.hpp"

#include <benchmark/benchmark.h>

using namespace qcoinv;

static void BM_Buchberger(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    Ideal ideal = coinvariant_ideal(n, k);
    for (auto _ : state) {
        GroebnerBasis basis = buchberger(ideal, TermOrder::neglex());
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_Buchberger)->Args({3, 2})->Args({4, 2})->Args({4, 3});

static void BM_VanishingIdeal(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    int k = static_cast<int>(state.range(1));
    auto alpha = default_alpha(k);
    auto points = generate_Y(n, k, alpha);
    for (auto _ : state) {
        GroebnerBasis basis = vanishing_ideal(points);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_VanishingIdeal)->Args({3, 2})->Args({4, 2});

static void BM_NormalForm(benchmark::State& state) {
    int n = 4, k = 2;
    GroebnerBasis basis = buchberger(coinvariant_ideal(n, k), TermOrder::neglex());
    MPoly f = hall_littlewood_p(3, n, n) * hall_littlewood_p(2, n, n);
    for (auto _ : state) {
        MPoly r = normal_form(f, basis);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_NormalForm);

BENCHMARK_MAIN();
