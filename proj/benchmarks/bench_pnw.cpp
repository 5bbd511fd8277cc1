#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "pnw/pnw.hpp"

namespace {

pnw::Word random_word(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::string s(n, 'a');
    for (auto& c : s) {
        if (rng() & 1u) c = 'b';
    }
    return pnw::Word(s);
}

void BM_MaxProfile(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(pnw::max_a_profile(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxProfile)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

void BM_BuildIndex(benchmark::State& state) {
    const auto w = random_word(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(pnw::build_index(w));
}
BENCHMARK(BM_BuildIndex)->RangeMultiplier(4)->Range(16, 4096);

void BM_Query(benchmark::State& state) {
    const auto ix = pnw::build_index(random_word(1024, 3));
    std::size_t x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ix.query({x % 512, 511 - x % 512}));
        ++x;
    }
}
BENCHMARK(BM_Query);

void BM_IsPrefixNormal(benchmark::State& state) {
    const auto w = pnw::build_pnf_a(random_word(static_cast<std::size_t>(state.range(0)), 4));
    const auto test = static_cast<pnw::NormalityTest>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(pnw::is_prefix_normal(w, test));
}
BENCHMARK(BM_IsPrefixNormal)
    ->ArgsProduct({{256, 1024},
                   {static_cast<long>(pnw::NormalityTest::profile), static_cast<long>(pnw::NormalityTest::online)}});

void BM_CountPrefixNormal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pnw::count_prefix_normal(n));
}
BENCHMARK(BM_CountPrefixNormal)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_CountPreNecklaces(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pnw::count_pre_necklaces(n));
}
BENCHMARK(BM_CountPreNecklaces)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ClassCensus(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const pnw::CensusOptions options{.jobs = static_cast<unsigned>(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(pnw::class_census(n, options));
}
BENCHMARK(BM_ClassCensus)->ArgsProduct({{12, 16}, {1, 0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
