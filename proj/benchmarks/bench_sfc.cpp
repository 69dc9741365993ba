#include <benchmark/benchmark.h>

#include <random>

#include "sfc/curve_map.hpp"
#include "sfc/degrid.hpp"
#include "sfc/dtw.hpp"
#include "sfc/image.hpp"

namespace {

void BM_HilbertD2XY(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const std::uint64_t n = std::uint64_t{1} << (2 * order);
    std::uint64_t d = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::hilbert_d2xy(order, d));
        d = (d + 977) & (n - 1);
    }
}
BENCHMARK(BM_HilbertD2XY)->Arg(4)->Arg(8)->Arg(12);

void BM_HilbertXY2D(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const std::uint32_t side = std::uint32_t{1} << order;
    std::uint32_t x = 0, y = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::hilbert_xy2d(order, {x, y}));
        x = (x + 131) & (side - 1);
        y = (y + 61) & (side - 1);
    }
}
BENCHMARK(BM_HilbertXY2D)->Arg(4)->Arg(8)->Arg(12);

void BM_MortonRoundTrip(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const std::uint64_t n = std::uint64_t{1} << (2 * order);
    std::uint64_t d = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::morton_xy2d(order, sfc::morton_d2xy(order, d)));
        d = (d + 977) & (n - 1);
    }
}
BENCHMARK(BM_MortonRoundTrip)->Arg(8)->Arg(12);

void BM_BuildMap(benchmark::State& state) {
    const auto kind = static_cast<sfc::CurveKind>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::build_map(kind, 256, 256));
    }
}
BENCHMARK(BM_BuildMap)
    ->Arg(static_cast<int>(sfc::CurveKind::Hilbert))
    ->Arg(static_cast<int>(sfc::CurveKind::Morton))
    ->Arg(static_cast<int>(sfc::CurveKind::Zigzag))
    ->Arg(static_cast<int>(sfc::CurveKind::GeneralizedHilbert));

void BM_Flatten(benchmark::State& state) {
    const auto kind = static_cast<sfc::CurveKind>(state.range(0));
    const sfc::CurveMap map = sfc::build_map(kind, 256, 256);
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    sfc::GrayImage img = sfc::GrayImage::filled(256, 256);
    for (double& v : img.pixels) v = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::flatten(img, map));
    }
}
BENCHMARK(BM_Flatten)
    ->Arg(static_cast<int>(sfc::CurveKind::Hilbert))
    ->Arg(static_cast<int>(sfc::CurveKind::Zigzag));

void BM_DeGrid(benchmark::State& state) {
    const sfc::CurveMap map = sfc::build_map(sfc::CurveKind::Hilbert, 64, 64);
    const unsigned k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::degrid(map, k));
    }
}
BENCHMARK(BM_DeGrid)->Arg(1)->Arg(2)->Arg(8);

void BM_Dtw(benchmark::State& state) {
    const std::size_t len = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> a(len), b(len);
    for (double& v : a) v = dist(rng);
    for (double& v : b) v = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sfc::dtw(a, b));
    }
    state.SetComplexityN(static_cast<std::int64_t>(len));
}
BENCHMARK(BM_Dtw)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oNSquared);

} // namespace

BENCHMARK_MAIN();
