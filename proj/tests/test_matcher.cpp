#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "wqo/families.hpp"
#include "wqo/matcher.hpp"
#include "wqo/perm.hpp"

using namespace wqo;

TEST(FindInducedEmbedding, PathInPath)
{
    const auto r = find_induced_embedding(path(3), path(4));
    ASSERT_TRUE(r.found());
    EXPECT_TRUE(is_induced_embedding(path(3), path(4), *r.embedding));
}

TEST(FindInducedEmbedding, CycleNotInPath) { EXPECT_EQ(find_induced_embedding(cycle(4), path(4)).status, SearchStatus::none); }

TEST(FindInducedEmbedding, SunFourNotInTGraph)
{
    EXPECT_EQ(find_induced_embedding(sun4(), t_graph(star_perm_t(6)).graph).status, SearchStatus::none);
}

TEST(FindInducedEmbedding, TGraphPairIncomparable)
{
    const Graph t6 = t_graph(star_perm_t(6)).graph;
    const Graph t8 = t_graph(star_perm_t(8)).graph;
    EXPECT_EQ(find_induced_embedding(t6, t8).status, SearchStatus::none);
    EXPECT_EQ(find_induced_embedding(t8, t6).status, SearchStatus::none);
}

TEST(FindInducedEmbedding, PatternLargerThanHost) { EXPECT_EQ(find_induced_embedding(path(5), path(4)).status, SearchStatus::none); }

TEST(FindInducedEmbedding, InducedNotJustSubgraph)
{
    // P4 is a subgraph of C4 but not an induced one
    EXPECT_EQ(find_induced_embedding(path(4), cycle(4)).status, SearchStatus::none);
    EXPECT_TRUE(find_induced_embedding(path(4), cycle(5)).found());
}

TEST(FindInducedEmbedding, BudgetGivesUndecided)
{
    const Graph t6 = t_graph(star_perm_t(6)).graph;
    const Graph t8 = t_graph(star_perm_t(8)).graph;
    const auto r = find_induced_embedding(t6, t8, {10, 1});
    EXPECT_EQ(r.status, SearchStatus::undecided);
    EXPECT_FALSE(r.embedding);
}

TEST(FindInducedEmbedding, AgreesWithBruteForceOnSmallHosts)
{
    std::mt19937_64 rng(5);
    int found = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int h = 1 + trial % 7;
        const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(h));
        const Graph host = oracle::random_graph(rng, h, 0.2 + 0.1 * (trial % 6));
        const Graph pattern = oracle::random_graph(rng, p, 0.2 + 0.1 * (trial % 5));
        const auto want = oracle::brute_embedding(pattern, host);
        const auto got = find_induced_embedding(pattern, host);
        ASSERT_EQ(got.found(), want.has_value()) << "trial " << trial;
        if (got.found()) {
            ++found;
            ASSERT_TRUE(is_induced_embedding(pattern, host, *got.embedding));
        }
    }
    EXPECT_GT(found, 500);
}

TEST(FindInducedEmbedding, DeterministicAcrossWorkerCounts)
{
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph host = oracle::random_graph(rng, 30, 0.3);
        const Graph pattern = oracle::random_graph(rng, 6, 0.4);
        const auto one = find_induced_embedding(pattern, host, {kDefaultStepBudget, 1});
        const auto four = find_induced_embedding(pattern, host, {kDefaultStepBudget, 4});
        ASSERT_EQ(one.status, four.status);
        ASSERT_EQ(one.embedding, four.embedding);
        ASSERT_EQ(one.steps, four.steps);
    }
    const Graph t6 = t_graph(star_perm_t(6)).graph;
    const Graph t8 = t_graph(star_perm_t(8)).graph;
    EXPECT_EQ(find_induced_embedding(t6, t8, {kDefaultStepBudget, 3}).steps, find_induced_embedding(t6, t8).steps);
}

TEST(IsInducedEmbedding, RejectsBadMaps)
{
    EXPECT_FALSE(is_induced_embedding(path(3), path(4), Embedding({1, 1, 2})));
    EXPECT_FALSE(is_induced_embedding(path(3), path(4), Embedding({1, 2, 4})));
    EXPECT_FALSE(is_induced_embedding(path(3), path(4), Embedding({1, 2, 5})));
    EXPECT_FALSE(is_induced_embedding(path(3), path(4), Embedding({1, 2})));
    EXPECT_TRUE(is_induced_embedding(path(3), path(4), Embedding({4, 3, 2})));
}

// Reflexivity and transitivity (witnesses composed) on a pool of graphs.
TEST(FindInducedEmbedding, QuasiOrderLaws)
{
    std::vector<Graph> pool{path(2), path(3), path(4), path(5), cycle(4), cycle(6), two_p3(), sun1(), s123(),
                            h_antichain(1), h_antichain(2), complete_bipartite(2, 3).graph, p_tilde(6)};
    std::mt19937_64 rng(1);
    while (pool.size() < 30) pool.push_back(oracle::random_bipartite(rng, 3 + static_cast<int>(pool.size() % 6), 0.5));
    for (const auto& g : pool) ASSERT_TRUE(find_induced_embedding(g, g).found());
    for (const auto& h : pool)
        for (const auto& g : pool) {
            const auto hg = find_induced_embedding(h, g);
            if (!hg.found()) continue;
            for (const auto& f : pool) {
                const auto gf = find_induced_embedding(g, f);
                if (!gf.found()) continue;
                std::vector<Vertex> image;
                for (Vertex v = 1; v <= h.order(); ++v) image.push_back((*gf.embedding)((*hg.embedding)(v)));
                ASSERT_TRUE(is_induced_embedding(h, f, Embedding(image)));
                ASSERT_TRUE(find_induced_embedding(h, f).found());
            }
        }
}

// Pattern containment implies induced containment of the inversion graphs.
TEST(FindInducedEmbedding, ConsistentWithPatternContainment)
{
    std::vector<Permutation> perms;
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        do perms.emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
    }
    std::vector<Graph> graphs;
    for (const auto& p : perms) graphs.push_back(permutation_graph(p));
    std::size_t checked = 0;
    for (std::size_t i = 0; i < perms.size(); ++i)
        for (std::size_t j = 0; j < perms.size(); ++j) {
            if (perms[i].size() > perms[j].size() || !contains_pattern(perms[j], perms[i])) continue;
            ++checked;
            ASSERT_TRUE(find_induced_embedding(graphs[i], graphs[j]).found()) << to_string(perms[i]) << " in " << to_string(perms[j]);
        }
    EXPECT_GT(checked, 10000U);
}

TEST(IsFree, Examples)
{
    EXPECT_TRUE(is_free(path(6), {path(7)}).is_free());
    EXPECT_TRUE(is_free(s_graph(star_perm_s(8), star_witness_s(8)).graph, {path(8), p_tilde(8)}).is_free());
    EXPECT_TRUE(is_free(t_graph(star_perm_t(10)).graph, {two_p3(), sun4()}).is_free());
}

TEST(IsFree, ReportsFirstWitness)
{
    const auto r = is_free(path(7), {cycle(4), two_p3(), path(3)});
    EXPECT_EQ(r.verdict, Freeness::contains);
    EXPECT_EQ(r.forbidden_index, 1U);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(is_induced_embedding(two_p3(), path(7), *r.witness));
}

TEST(AreIsomorphic, Examples)
{
    EXPECT_TRUE(are_isomorphic(path(4), relabel(path(4), std::vector<Vertex>{3, 1, 4, 2})));
    EXPECT_FALSE(are_isomorphic(cycle(6), two_p3()));
    EXPECT_TRUE(are_isomorphic(bipartite_complement(path(7), odd_even_parts(7)), path(7)));
    EXPECT_FALSE(are_isomorphic(path(4), complete_bipartite(1, 3).graph));
}

TEST(AreIsomorphic, ShuffledCopies)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::random_graph(rng, 12, 0.35);
        EXPECT_TRUE(are_isomorphic(g, oracle::shuffled(rng, g)));
    }
}

TEST(HasPathSubgraph, Examples)
{
    EXPECT_TRUE(has_path_subgraph(cycle(9), 9));
    EXPECT_FALSE(has_path_subgraph(s123(), 9));
    EXPECT_TRUE(has_path_subgraph(complete_bipartite(5, 4).graph, 9));
    EXPECT_FALSE(has_path_subgraph(complete_bipartite(6, 3).graph, 9));
    EXPECT_TRUE(has_path_subgraph(Graph(1), 1));
    EXPECT_FALSE(has_path_subgraph(Graph(3), 2));
}

TEST(HasPathSubgraph, SearchAndSubsetProgrammeAgree)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 6 + trial % 14;
        const Graph g = oracle::random_graph(rng, n, 0.12 + 0.02 * (trial % 5));
        for (int k = 1; k <= n; k += 2) {
            const bool dfs = detail::has_path_subgraph_dfs(g, k);
            const auto dp = detail::has_path_subgraph_dp(g, k);
            ASSERT_TRUE(dp);
            ASSERT_EQ(dfs, *dp) << "n=" << n << " k=" << k;
            ASSERT_EQ(has_path_subgraph(g, k), dfs);
        }
    }
}

TEST(CountInducedEmbeddings, Examples)
{
    EXPECT_EQ(count_induced_embeddings(Graph(1), path(3), 10).count, 3U);
    EXPECT_EQ(count_induced_embeddings(complete(2), cycle(4), 10).count, 8U);
    EXPECT_EQ(count_induced_embeddings(path(3), cycle(4), 100).count, 8U);
    EXPECT_EQ(count_induced_embeddings(path(3), cycle(4), 5).count, 5U);
}

TEST(CountInducedEmbeddings, AgreesWithBruteForce)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph host = oracle::random_graph(rng, 2 + trial % 6, 0.5);
        const Graph pattern = oracle::random_graph(rng, 1 + trial % 4, 0.5);
        ASSERT_EQ(count_induced_embeddings(pattern, host, 1'000'000).count, oracle::brute_embedding_count(pattern, host));
    }
}
