#include "delzant/geometry.hpp"
#include "delzant/reconstruct.hpp"
#include "delzant/spectral.hpp"
#include "delzant/zoo.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace delzant;

namespace {

std::vector<DelzantPolygon> sample(int d, int n) {
    std::vector<DelzantPolygon> out;
    for (std::uint64_t seed = 0; static_cast<int>(out.size()) < n; ++seed) {
        auto p = random_delzant(d, seed, 4);
        if (parallel_pair_count(p) <= 2) out.push_back(std::move(p));
    }
    return out;
}

void BM_SpectralData(benchmark::State& state) {
    auto polys = sample(static_cast<int>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_data(polys[i++ % polys.size()]));
}
BENCHMARK(BM_SpectralData)->DenseRange(4, 8, 2);

void BM_EnumerateCandidates(benchmark::State& state) {
    std::vector<SpectralData> data;
    for (const auto& p : sample(static_cast<int>(state.range(0)), 16)) data.push_back(spectral_data(p));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_candidates(data[i++ % data.size()]));
}
BENCHMARK(BM_EnumerateCandidates)->DenseRange(4, 8, 1)->Unit(benchmark::kMicrosecond);

void BM_DetectSubpolygons(benchmark::State& state) {
    auto polys = sample(static_cast<int>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(detect_subpolygons(polys[i++ % polys.size()]));
}
BENCHMARK(BM_DetectSubpolygons)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_BuildMostObtuse(benchmark::State& state) {
    auto p = random_delzant(static_cast<int>(state.range(0)), 7, 4);
    const auto& v = p.vertices();
    SignedEdgeList input;
    for (std::size_t k = 0; k < v.size(); ++k) input.edges.push_back(v[(k + 1) % v.size()] - v[k]);
    input.anchor_normal = primitive_outward_normal(input.edges.front());
    for (auto _ : state) benchmark::DoNotOptimize(build_most_obtuse(input));
}
BENCHMARK(BM_BuildMostObtuse)->DenseRange(4, 10, 3)->Unit(benchmark::kMicrosecond);

void BM_Census(benchmark::State& state) {
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel_pair_census(6, bound));
}
BENCHMARK(BM_Census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
