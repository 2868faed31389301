#include <benchmark/benchmark.h>

#include "wqo/families.hpp"
#include "wqo/matcher.hpp"

namespace {

using namespace wqo;

void BM_TAntichainPair(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph pattern = t_graph(star_perm_t(n)).graph;
    const Graph host = t_graph(star_perm_t(n + 2)).graph;
    std::uint64_t steps = 0;
    for (auto _ : state) {
        auto r = find_induced_embedding(pattern, host);
        steps = r.steps;
        benchmark::DoNotOptimize(r);
    }
    state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_TAntichainPair)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SFreeness(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Graph host = s_graph(star_perm_s(n), star_witness_s(n)).graph;
    const Graph forbidden[] = {path(8), p_tilde(8)};
    for (auto _ : state) benchmark::DoNotOptimize(is_free(host, forbidden));
}
BENCHMARK(BM_SFreeness)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_PathSubgraph(benchmark::State& state)
{
    const Graph g = universal_grid(3, static_cast<int>(state.range(0))).graph;
    const int k = g.order();
    for (auto _ : state) benchmark::DoNotOptimize(has_path_subgraph(g, k));
}
BENCHMARK(BM_PathSubgraph)->DenseRange(3, 6, 1);

} // namespace
