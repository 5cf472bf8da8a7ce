#include <benchmark/benchmark.h>

#include "mmfusion/cover_search.hpp"
#include "mmfusion/fusion.hpp"
#include "mmfusion/two_group_cover.hpp"

using namespace mmfusion;

static void BM_FusionTensor(benchmark::State& state) {
    const ModelParams params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(fusion_tensor(params));
}
BENCHMARK(BM_FusionTensor)->Args({4, 5})->Args({7, 11})->Args({13, 17});

static void BM_VerifyCover(benchmark::State& state) {
    const ModelParams params(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const auto tensor = fusion_tensor(params);
    const auto cm = CoverMap::canonical(GroupContext(params));
    const auto threads = static_cast<unsigned>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(verify_cover(cm, tensor, threads));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cm.coset_count() * (cm.coset_count() + 1) / 2));
}
BENCHMARK(BM_VerifyCover)->Args({4, 5, 1})->Args({7, 9, 1})->Args({8, 9, 1})->Args({8, 9, 4})->Unit(benchmark::kMillisecond);

static void BM_SearchCyclic(benchmark::State& state) {
    const auto tensor = fusion_tensor(ModelParams(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
    const auto max_order = state.range(2);
    for (auto _ : state) benchmark::DoNotOptimize(search_cyclic_covers(tensor, max_order));
}
BENCHMARK(BM_SearchCyclic)->Args({3, 4, 12})->Args({4, 5, 12})->Args({4, 5, 20})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
