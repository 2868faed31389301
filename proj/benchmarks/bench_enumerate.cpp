#include <benchmark/benchmark.h>

#include "wqo/canonical.hpp"
#include "wqo/enumerate.hpp"
#include "wqo/families.hpp"

namespace {

using namespace wqo;

void BM_BipartiteLevels(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::size_t count = 0;
    for (auto _ : state) {
        auto levels = bipartite_levels(n);
        count = levels.back().size();
        benchmark::DoNotOptimize(levels);
    }
    state.counters["classes"] = static_cast<double>(count);
}
BENCHMARK(BM_BipartiteLevels)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

void BM_CanonicalGrid(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    const Graph g = universal_grid(m, m).graph;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalGrid)->DenseRange(2, 6, 2);

void BM_CanonicalCompleteBipartite(benchmark::State& state)
{
    const int a = static_cast<int>(state.range(0));
    const Graph g = complete_bipartite(a, a).graph;
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalCompleteBipartite)->DenseRange(2, 8, 2);

} // namespace
