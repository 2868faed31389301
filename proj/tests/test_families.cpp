#include <gtest/gtest.h>

#include <algorithm>

#include "wqo/error.hpp"
#include "wqo/families.hpp"
#include "wqo/matcher.hpp"
#include "wqo/structure.hpp"

using namespace wqo;

namespace {

std::vector<int> degree_sequence(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.rbegin(), d.rend());
    return d;
}

std::vector<Vertex> range(Vertex lo, Vertex hi)
{
    std::vector<Vertex> r;
    for (Vertex v = lo; v <= hi; ++v) r.push_back(v);
    return r;
}

std::vector<Vertex> zone_nbrs(const ZonedLayout& t, Vertex v, Zone z)
{
    std::vector<Vertex> out;
    for (Vertex u : t.zone_vertices(z))
        if (t.graph.adjacent(v, u)) out.push_back(u);
    return out;
}

bool independent(const Graph& g, const std::vector<Vertex>& vs)
{
    for (Vertex u : vs)
        for (Vertex v : vs)
            if (g.adjacent(u, v)) return false;
    return true;
}

} // namespace

TEST(TGraph, SixHasTwentyFourVerticesAndEightyFourEdges)
{
    const auto t = t_graph(star_perm_t(6));
    EXPECT_EQ(t.graph.order(), 24);
    EXPECT_EQ(t.graph.edge_count(), 6U + 36U + 42U);
    EXPECT_TRUE(t.parts.valid_for(t.graph));
    EXPECT_EQ(t.graph.label(1), "a1");
    EXPECT_EQ(t.graph.label(24), "d6");
}

TEST(TGraph, DegreeOfA)
{
    const auto t = t_graph(star_perm_t(8));
    for (int i = 1; i <= 8; ++i) EXPECT_EQ(t.graph.degree(t.vertex(Zone::A, i)), i + 1);
}

TEST(TGraph, StructuralInvariants)
{
    for (int n = 6; n <= 16; n += 2) {
        const auto p = star_perm_t(n);
        const auto t = t_graph(p);
        ASSERT_EQ(t.graph.order(), 4 * n);
        for (Zone z : {Zone::A, Zone::B, Zone::C, Zone::D}) {
            ASSERT_EQ(t.zone_vertices(z).size(), static_cast<std::size_t>(n));
            ASSERT_TRUE(independent(t.graph, t.zone_vertices(z)));
        }
        for (int i = 1; i <= n; ++i) {
            const Vertex a = t.vertex(Zone::A, i);
            const Vertex b = t.vertex(Zone::B, i);
            ASSERT_EQ(zone_nbrs(t, a, Zone::B), std::vector<Vertex>{t.vertex(Zone::B, p(i))});
            ASSERT_EQ(zone_nbrs(t, b, Zone::A).size(), 1U);
            ASSERT_EQ(zone_nbrs(t, t.vertex(Zone::C, i), Zone::D), t.zone_vertices(Zone::D));
            ASSERT_EQ(zone_nbrs(t, a, Zone::D), range(t.vertex(Zone::D, 1), t.vertex(Zone::D, i)));
            ASSERT_EQ(zone_nbrs(t, b, Zone::C), range(t.vertex(Zone::C, 1), t.vertex(Zone::C, i)));
            ASSERT_TRUE(zone_nbrs(t, a, Zone::C).empty());
            ASSERT_TRUE(zone_nbrs(t, b, Zone::D).empty());
        }
        EXPECT_EQ(t.graph.edge_count(), static_cast<std::size_t>(n + n * n + n * (n + 1)));
    }
}

TEST(TGraph, ChainZonesAreNested)
{
    for (int n = 6; n <= 16; n += 2) {
        const auto t = t_graph(star_perm_t(n));
        std::vector<Vertex> ad = t.zone_vertices(Zone::A);
        for (Vertex v : t.zone_vertices(Zone::D)) ad.push_back(v);
        std::vector<Vertex> bc = t.zone_vertices(Zone::B);
        for (Vertex v : t.zone_vertices(Zone::C)) bc.push_back(v);
        const Graph zp = induced_subgraph(t.graph, ad);
        const Graph zpp = induced_subgraph(t.graph, bc);
        EXPECT_TRUE(neighborhoods_nested(zp, range(1, n)).nested);
        EXPECT_TRUE(neighborhoods_nested(zpp, range(1, n)).nested);
    }
}

TEST(TGraph, FreeOfTwoP3AndSun4)
{
    for (int n = 6; n <= 14; n += 2) EXPECT_TRUE(is_free(t_graph(star_perm_t(n)).graph, {two_p3(), sun4()}).is_free()) << n;
}

TEST(SGraph, EightHasTwentyFourVerticesAndSeventyTwoEdges)
{
    const auto s = s_graph(star_perm_s(8), star_witness_s(8));
    EXPECT_EQ(s.graph.order(), 24);
    EXPECT_EQ(s.graph.edge_count(), 72U);
    EXPECT_EQ(s.graph.degree(s.vertex(Zone::B, 1)), 3);
    EXPECT_TRUE(s.parts.valid_for(s.graph));
}

TEST(SGraph, NeighbourhoodsFollowWitness)
{
    for (int n = 8; n <= 16; n += 2) {
        const auto w = star_witness_s(n);
        const auto s = s_graph(star_perm_s(n), w);
        const auto rho_inv = inverse(w.rho);
        std::size_t sum = 0;
        for (int i = 1; i <= n; ++i) {
            const Vertex b = s.vertex(Zone::B, i);
            ASSERT_EQ(zone_nbrs(s, b, Zone::A), range(s.vertex(Zone::A, 1), s.vertex(Zone::A, w.rho(i))));
            ASSERT_EQ(zone_nbrs(s, b, Zone::C), range(s.vertex(Zone::C, 1), s.vertex(Zone::C, w.mu(i))));
            ASSERT_EQ(s.graph.degree(b), w.rho(i) + w.mu(i));
            sum += static_cast<std::size_t>(w.rho(i) + w.mu(i));
            // a_i sees exactly the b_j with rho(j) >= i
            std::vector<Vertex> want;
            for (int j = 1; j <= n; ++j)
                if (w.rho(j) >= i) want.push_back(s.vertex(Zone::B, j));
            ASSERT_EQ(zone_nbrs(s, s.vertex(Zone::A, i), Zone::B), want);
            ASSERT_GE(static_cast<int>(want.size()), 1);
            ASSERT_TRUE(std::find(want.begin(), want.end(), s.vertex(Zone::B, rho_inv(i))) != want.end());
        }
        EXPECT_EQ(s.graph.edge_count(), sum);
        EXPECT_EQ(sum, static_cast<std::size_t>(n * (n + 1)));
    }
}

TEST(SGraph, RejectsBadWitness)
{
    EXPECT_THROW(s_graph(star_perm_s(8), {rho_star(8), mu_star(8)}), InputError);
}

TEST(SGraph, FreeOfP8AndItsComplement)
{
    for (int n = 8; n <= 16; n += 2)
        EXPECT_TRUE(is_free(s_graph(star_perm_s(n), star_witness_s(n)).graph, {path(8), p_tilde(8)}).is_free()) << n;
}

TEST(UniversalGrid, Examples)
{
    const auto g = universal_grid(5, 5);
    EXPECT_EQ(g.graph.order(), 25);
    EXPECT_EQ(g.graph.edge_count(), 60U);
    EXPECT_TRUE(g.parts.valid_for(g.graph));
    EXPECT_EQ(universal_grid(1, 7).graph.edge_count(), 0U);
    const auto p4 = universal_grid(2, 2);
    EXPECT_EQ(p4.graph.edge_count(), 3U);
    EXPECT_TRUE(p4.graph.adjacent(1, 3));
    EXPECT_TRUE(p4.graph.adjacent(2, 3));
    EXPECT_TRUE(p4.graph.adjacent(2, 4));
    EXPECT_TRUE(are_isomorphic(p4.graph, path(4)));
    const auto h = universal_grid(3, 4);
    EXPECT_TRUE(h.graph.adjacent(grid_vertex(4, 1, 3), grid_vertex(4, 2, 1)));
    EXPECT_TRUE(h.graph.adjacent(grid_vertex(4, 1, 3), grid_vertex(4, 2, 3)));
    EXPECT_FALSE(h.graph.adjacent(grid_vertex(4, 1, 3), grid_vertex(4, 2, 4)));
    EXPECT_THROW(universal_grid(0, 3), InputError);
}

TEST(UniversalGrid, EdgeCountFormula)
{
    for (int k = 1; k <= 8; ++k)
        for (int m = 1; m <= 8; ++m)
            EXPECT_EQ(universal_grid(k, m).graph.edge_count(), static_cast<std::size_t>((k - 1) * m * (m + 1) / 2));
}

TEST(NamedGraphs, Shapes)
{
    EXPECT_EQ(sun4().order(), 8);
    EXPECT_EQ(sun4().edge_count(), 8U);
    EXPECT_EQ(degree_sequence(sun4()), (std::vector<int>{3, 3, 3, 3, 1, 1, 1, 1}));
    EXPECT_EQ(sun1().order(), 5);
    EXPECT_EQ(sun1().edge_count(), 5U);
    EXPECT_EQ(degree_sequence(sun1()), (std::vector<int>{3, 2, 2, 2, 1}));
    EXPECT_EQ(degree_sequence(s123()), (std::vector<int>{3, 2, 2, 2, 1, 1, 1}));
    EXPECT_TRUE(is_connected(s123()));
    EXPECT_EQ(s123().edge_count(), 6U);
    EXPECT_EQ(two_p3().edge_count(), 4U);
    EXPECT_EQ(complete(5).edge_count(), 10U);
    EXPECT_EQ(cycle(6).edge_count(), 6U);
    EXPECT_EQ(complete_bipartite(2, 3).graph.edge_count(), 6U);
    EXPECT_THROW(cycle(2), InputError);
    EXPECT_THROW(path(0), InputError);
    EXPECT_THROW(h_antichain(0), InputError);
}

TEST(NamedGraphs, SunsAreInducedInEachOther)
{
    EXPECT_TRUE(find_induced_embedding(sun1(), sun4()).found());
    EXPECT_FALSE(find_induced_embedding(sun4(), sun1()).found());
}

TEST(HAntichain, Shape)
{
    for (int i = 1; i <= 6; ++i) {
        const Graph h = h_antichain(i);
        EXPECT_EQ(h.order(), i + 5);
        EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(i + 4));
        EXPECT_TRUE(is_connected(h));
        EXPECT_EQ(h.degree(i + 2), 1);
        EXPECT_EQ(h.degree(i + 5), 1);
    }
}

TEST(HAntichain, PairwiseIncomparable)
{
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j) EXPECT_FALSE(find_induced_embedding(h_antichain(i), h_antichain(j)).found()) << i << " in " << j;
}

TEST(PTilde, Examples)
{
    EXPECT_TRUE(are_isomorphic(p_tilde(7), path(7)));
    EXPECT_EQ(p_tilde(8).edge_count(), 9U);
    for (int k = 1; k <= 10; ++k)
        EXPECT_EQ(p_tilde(k).edge_count(), static_cast<std::size_t>(((k + 1) / 2) * (k / 2) - (k - 1)));
}
