#include "symtaut/faces.hpp"
#include "symtaut/region.hpp"

#include <benchmark/benchmark.h>

using namespace symtaut;

static void BM_FaceChainBN(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const CurveParams curve(g, 2 * g - 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(face_chains(curve, g - 1));
    }
}
BENCHMARK(BM_FaceChainBN)->DenseRange(3, 9, 2);

static void BM_RegionMap(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(region_map(g, CurveKind::BrillNoetherGeneral, 2 * g));
    }
}
BENCHMARK(BM_RegionMap)->Arg(10)->Arg(20)->Arg(40);
