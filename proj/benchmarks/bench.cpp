#include <benchmark/benchmark.h>

#include "apollonite/band.hpp"
#include "apollonite/sandpile.hpp"

using namespace apollonite;

static void enumerate_band_to(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_band(state.range(0), Window::square(0, 2)));
}
BENCHMARK(enumerate_band_to)->Arg(100)->Arg(500);

// fresh session each time so the tile caches start empty
static void tile_build(benchmark::State& state) {
    const Circle c{153, {17, 120}};
    for (auto _ : state) {
        BandPacking band;
        benchmark::DoNotOptimize(band.tile(c).tile.squares.size());
    }
}
BENCHMARK(tile_build);

static void global_odometer(benchmark::State& state) {
    const Circle c{153, {17, 120}};
    for (auto _ : state) {
        BandPacking band;
        const GlobalOdometer& g = band.odometer(c);
        benchmark::DoNotOptimize(g(GaussInt{37, -11}));
    }
}
BENCHMARK(global_odometer);

static void odometer_evaluation(benchmark::State& state) {
    BandPacking band;
    const GlobalOdometer& g = band.odometer(Circle{153, {17, 120}});
    Int x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(g(GaussInt{x % 401 - 200, x % 307 - 150}));
        ++x;
    }
}
BENCHMARK(odometer_evaluation);

static void sandpile(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(stabilize(state.range(0)).total);
}
BENCHMARK(sandpile)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
