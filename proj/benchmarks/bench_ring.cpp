#include "symtaut/taut_ring.hpp"
#include "symtaut/theta_filtration.hpp"

#include <benchmark/benchmark.h>

using namespace symtaut;

static void BM_NormalForm(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const Ambient amb{g, 2 * g};
    const TautClass c = TautClass::monomial(amb, 0, g) + TautClass::monomial(amb, 1, g - 1, Rational(-3, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(c));
    }
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 12, 2);

static void BM_GramRank(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const Ambient amb{g, 2 * g};
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(gram_matrix(amb, g)));
    }
}
BENCHMARK(BM_GramRank)->DenseRange(2, 12, 2);

static void BM_ThetaPerp(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const Ambient amb{g, 2 * g - 1};
    for (auto _ : state) {
        for (int i = 0; i <= g + 1; ++i) {
            benchmark::DoNotOptimize(theta_perp(amb, g - 1, i));
        }
    }
}
BENCHMARK(BM_ThetaPerp)->DenseRange(2, 10, 2);
