#include "qcoinv/qfield.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace qcoinv;

namespace {

std::vector<QRat> sample_values(size_t count, int max_deg) {
    std::mt19937_64 rng(12345);
    std::vector<QRat> out;
    out.reserve(count);
    while (out.size() < count) {
        auto poly = [&](int cap) {
            std::vector<mpz_class> c;
            int deg = static_cast<int>(rng() % static_cast<unsigned>(cap + 1));
            for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 9) - 4);
            return IntPoly(std::move(c));
        };
        IntPoly den = poly(max_deg);
        if (den.is_zero()) continue;
        out.emplace_back(poly(max_deg), den);
    }
    return out;
}

}  // namespace

static void BM_QRatMul(benchmark::State& state) {
    auto vals = sample_values(256, static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        QRat r = vals[i % vals.size()] * vals[(i + 1) % vals.size()];
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_QRatMul)->Arg(2)->Arg(6)->Arg(12);

static void BM_QRatAdd(benchmark::State& state) {
    auto vals = sample_values(256, static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        QRat r = vals[i % vals.size()] + vals[(i + 1) % vals.size()];
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_QRatAdd)->Arg(2)->Arg(6)->Arg(12);

static void BM_IntPolyGcd(benchmark::State& state) {
    std::mt19937_64 rng(99);
    IntPoly common = IntPoly::parse("q^3 - 2*q + 1");
    IntPoly a = common * IntPoly::parse("3*q^4 + q^2 - 5");
    IntPoly b = common * IntPoly::parse("q^5 - 7*q");
    for (auto _ : state) {
        IntPoly g = IntPoly::gcd(a, b);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_IntPolyGcd);
