#include "qcoinv/polyring.hpp"
#include "qcoinv/symfunc.hpp"

#include <benchmark/benchmark.h>

using namespace qcoinv;

static void BM_PolyMul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    MPoly f = hall_littlewood_p(2, n, n);
    MPoly g = elementary_sym(n - 1, n);
    for (auto _ : state) {
        MPoly h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_PolyMul)->Arg(3)->Arg(5)->Arg(7);

static void BM_HallLittlewood(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MPoly p = hall_littlewood_p(d, 5, 5);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_HallLittlewood)->Arg(2)->Arg(4)->Arg(6);

static void BM_Division(benchmark::State& state) {
    int n = 4;
    MPoly f = hall_littlewood_p(3, n, n) * hall_littlewood_p(2, n - 1, n);
    std::vector<MPoly> divisors;
    for (int i = 1; i <= n; ++i) divisors.push_back(hall_littlewood_p(2, i, n));
    for (auto _ : state) {
        MPoly r = reduce(f, divisors, TermOrder::neglex());
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Division);
