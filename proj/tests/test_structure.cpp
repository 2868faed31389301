#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "wqo/composition.hpp"
#include "wqo/enumerate.hpp"
#include "wqo/error.hpp"
#include "wqo/families.hpp"
#include "wqo/letter.hpp"
#include "wqo/matcher.hpp"
#include "wqo/structure.hpp"

using namespace wqo;

namespace {

std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return v; }

BipartiteGraph k1(bool in_x) { return {Graph(1), in_x ? Bipartition::from_part_a(1, ids({1})) : Bipartition::from_part_a(1, {})}; }

BipartiteGraph k2() { return {complete(2), Bipartition::from_part_a(2, ids({1}))}; }

BipartiteGraph p3() { return {path(3), odd_even_parts(3)}; }

bool has_2k2(const Graph& g)
{
    const auto e = g.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            const Vertex a = e[i].u, b = e[i].v, c = e[j].u, d = e[j].v;
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d)) return true;
        }
    return false;
}

/// Straight from the three definitions, every ordered split tried.
class BruteDecomposable {
public:
    BruteDecomposable(const Graph& g, const Bipartition& parts) : g_(g), parts_(parts) {}

    bool operator()(std::uint32_t mask)
    {
        if (std::popcount(mask) == 1) return true;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        bool ok = false;
        for (std::uint32_t s1 = (mask - 1) & mask; s1 != 0 && !ok; s1 = (s1 - 1) & mask) {
            const std::uint32_t s2 = mask ^ s1;
            if (!fits(s1, s2)) continue;
            ok = (*this)(s1) && (*this)(s2);
        }
        memo_[mask] = ok;
        return ok;
    }

private:
    bool fits(std::uint32_t s1, std::uint32_t s2) const
    {
        bool union_ok = true, join_ok = true, skew_ok = true;
        for (Vertex u = 1; u <= g_.order(); ++u) {
            if (!(s1 >> (u - 1) & 1U)) continue;
            for (Vertex v = 1; v <= g_.order(); ++v) {
                if (!(s2 >> (v - 1) & 1U)) continue;
                const bool e = g_.adjacent(u, v);
                const bool cross = parts_.in_a(u) != parts_.in_a(v);
                if (e) union_ok = false;
                if (cross && !e) join_ok = false;
                if (parts_.in_a(u) && !parts_.in_a(v) && !e) skew_ok = false;
                if (!parts_.in_a(u) && parts_.in_a(v) && e) skew_ok = false;
            }
        }
        return union_ok || join_ok || skew_ok;
    }

    const Graph& g_;
    const Bipartition& parts_;
    std::map<std::uint32_t, bool> memo_;
};

} // namespace

TEST(NeighborhoodsNested, Examples)
{
    const auto k = complete_bipartite(3, 3);
    const auto r = neighborhoods_nested(k.graph, k.parts.part_a());
    EXPECT_TRUE(r.nested);
    EXPECT_EQ(r.chain, ids({1, 2, 3}));
    EXPECT_FALSE(neighborhoods_nested(two_p3(), ids({2, 5})).nested);
    EXPECT_FALSE(neighborhoods_nested(cycle(6), ids({1, 3, 5})).nested);
    const auto p = neighborhoods_nested(path(4), ids({2, 4}));
    EXPECT_TRUE(p.nested);
    EXPECT_EQ(p.chain, ids({4, 2}));
    EXPECT_THROW(neighborhoods_nested(path(3), ids({1, 2})), InputError);
}

TEST(NeighborhoodsNested, EquivalentToNo2K2OnSmallBipartiteGraphs)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : enumerate_bipartite(n, false)) {
            const auto parts = *find_bipartition(g);
            const bool nested_a = neighborhoods_nested(g, parts.part_a()).nested;
            const bool nested_b = neighborhoods_nested(g, parts.part_b()).nested;
            ASSERT_EQ(nested_a, !has_2k2(g));
            ASSERT_EQ(nested_b, nested_a);
        }
}

TEST(NeighborhoodsNested, ChainIsOrdered)
{
    const auto t = t_graph(star_perm_t(8));
    const auto r = neighborhoods_nested(t.graph, t.zone_vertices(Zone::C));
    ASSERT_TRUE(r.nested);
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
        const auto& lo = t.graph.neighborhood(r.chain[i]);
        const auto& hi = t.graph.neighborhood(r.chain[i + 1]);
        EXPECT_TRUE((lo & hi) == lo);
    }
}

TEST(Biconvex, PathFourInNaturalOrder)
{
    EXPECT_TRUE(verify_biconvex_order(path(4), odd_even_parts(4), ids({1, 3}), ids({2, 4})));
    EXPECT_THROW(verify_biconvex_order(path(4), odd_even_parts(4), ids({1}), ids({2, 4})), InputError);
}

TEST(Biconvex, CycleSixRejectsEveryOrder)
{
    const auto parts = odd_even_parts(6);
    std::vector<Vertex> a{1, 3, 5};
    int tried = 0;
    do {
        std::vector<Vertex> b{2, 4, 6};
        do {
            ++tried;
            EXPECT_FALSE(verify_biconvex_order(cycle(6), parts, a, b));
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));
    EXPECT_EQ(tried, 36);
    EXPECT_FALSE(find_biconvex_order(cycle(6), parts));
}

TEST(Biconvex, SGraphProofOrder)
{
    for (int n = 8; n <= 16; n += 2) {
        const auto s = s_graph(star_perm_s(n), star_witness_s(n));
        auto ac = s.zone_vertices(Zone::A);
        std::reverse(ac.begin(), ac.end());
        for (Vertex v : s.zone_vertices(Zone::C)) ac.push_back(v);
        EXPECT_TRUE(verify_biconvex_order(s.graph, s.parts, ac, s.zone_vertices(Zone::B))) << n;
        std::reverse(ac.begin(), ac.end());
        EXPECT_TRUE(verify_biconvex_order(s.graph, s.parts, ac, s.zone_vertices(Zone::B))) << n;
    }
}

TEST(FindBiconvexOrder, Examples)
{
    const auto r = find_biconvex_order(path(5), odd_even_parts(5));
    ASSERT_TRUE(r);
    EXPECT_TRUE(verify_biconvex_order(path(5), odd_even_parts(5), r->order_a, r->order_b));
    EXPECT_EQ(r->order_a, ids({1, 3, 5}));
    EXPECT_TRUE(find_biconvex_order(two_p3(), *find_bipartition(two_p3())));
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_bipartite(rng, 2 + t % 7, 0.4);
        const auto parts = *find_bipartition(g);
        const auto found = find_biconvex_order(g, parts);
        if (found) EXPECT_TRUE(verify_biconvex_order(g, parts, found->order_a, found->order_b));
    }
    const auto big = complete_bipartite(9, 1);
    EXPECT_THROW(find_biconvex_order(big.graph, big.parts), InputError);
}

TEST(IncomparabilityGraph, SEightEdgeList)
{
    const auto s = s_graph(star_perm_s(8), star_witness_s(8));
    const Graph inc = incomparability_graph(s.graph, s.zone_vertices(Zone::B));
    std::vector<Edge> want{{1, 8}, {2, 8}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {5, 6}};
    EXPECT_EQ(inc.edges(), want);
    EXPECT_EQ(inc.label(1), "b1");
}

TEST(IncomparabilityGraph, IsomorphicToInversionGraph)
{
    for (int n : {8, 10, 12}) {
        const auto s = s_graph(star_perm_s(n), star_witness_s(n));
        EXPECT_TRUE(are_isomorphic(incomparability_graph(s.graph, s.zone_vertices(Zone::B)), permutation_graph(star_perm_s(n))));
    }
}

TEST(IncomparabilityGraph, NestedPartGivesEdgeless)
{
    const auto t = t_graph(star_perm_t(6));
    EXPECT_EQ(incomparability_graph(t.graph, t.zone_vertices(Zone::C)).edge_count(), 0U);
    EXPECT_THROW(incomparability_graph(path(3), ids({1, 2})), InputError);
}

TEST(Compositions, Examples)
{
    const auto e = skew_join(k1(true), k1(false));
    EXPECT_EQ(e.graph, complete(2));
    EXPECT_TRUE(e.parts.in_a(1));
    EXPECT_EQ(skew_join(k1(false), k1(true)).graph.edge_count(), 0U);
    const auto c4 = join(k2(), k2());
    EXPECT_TRUE(are_isomorphic(c4.graph, cycle(4)));
    EXPECT_EQ(c4.parts.part_a().to_vector(), ids({1, 3}));
    const auto u = disjoint_union(p3(), p3());
    EXPECT_EQ(u.graph, two_p3());
    EXPECT_EQ(u.parts.part_a().to_vector(), ids({1, 3, 4, 6}));
}

TEST(Compositions, JoinAddsAllCrossEdges)
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const Graph a = oracle::random_bipartite(rng, 1 + t % 5, 0.5);
        const Graph b = oracle::random_bipartite(rng, 1 + t % 4, 0.5);
        const BipartiteGraph g1{a, *find_bipartition(a)};
        const BipartiteGraph g2{b, *find_bipartition(b)};
        const auto j = join(g1, g2);
        const auto u = disjoint_union(g1, g2);
        const auto s = skew_join(g1, g2);
        const int n1 = a.order();
        for (Vertex x = 1; x <= j.graph.order(); ++x)
            for (Vertex y = x + 1; y <= j.graph.order(); ++y) {
                const bool across = x <= n1 && y > n1;
                const bool opposite = j.parts.in_a(x) != j.parts.in_a(y);
                ASSERT_EQ(j.graph.adjacent(x, y), across ? opposite : u.graph.adjacent(x, y));
                ASSERT_EQ(s.graph.adjacent(x, y), across ? (j.parts.in_a(x) && !j.parts.in_a(y)) : u.graph.adjacent(x, y));
            }
        ASSERT_EQ(j.parts, u.parts);
    }
}

TEST(Decompose, PathSixAndPathSeven)
{
    const auto p6 = decompose(path(6), odd_even_parts(6));
    ASSERT_EQ(p6.status, DecomposeStatus::decomposed);
    EXPECT_EQ(recompose(*p6.tree), path(6));
    EXPECT_EQ(tree_parts(*p6.tree), odd_even_parts(6));
    EXPECT_EQ(decompose(path(7), odd_even_parts(7)).status, DecomposeStatus::not_decomposable);
    EXPECT_EQ(decompose(s123(), *find_bipartition(s123())).status, DecomposeStatus::not_decomposable);
}

TEST(Decompose, LimitsAndErrors)
{
    EXPECT_EQ(decompose(path(17), odd_even_parts(17)).status, DecomposeStatus::undecided);
    EXPECT_THROW(decompose(path(3), Bipartition::from_part_a(3, ids({1, 2}))), InputError);
    const auto one = decompose(Graph(1), Bipartition::from_part_a(1, ids({1})));
    ASSERT_EQ(one.status, DecomposeStatus::decomposed);
    EXPECT_EQ(one.tree->kind, NodeKind::leaf);
}

TEST(Decompose, AgreesWithBruteForceOnSmallGraphs)
{
    int yes = 0, no = 0;
    for (int n = 1; n <= 8; ++n)
        for (const auto& g : enumerate_bipartite(n, false)) {
            const auto parts = *find_bipartition(g);
            for (const auto& orient : {parts, parts.swapped()}) {
                BruteDecomposable brute(g, orient);
                const bool want = brute((std::uint32_t{1} << n) - 1);
                const auto got = decompose(g, orient);
                ASSERT_EQ(got.status == DecomposeStatus::decomposed, want) << n;
                if (!want) {
                    ++no;
                    continue;
                }
                ++yes;
                ASSERT_EQ(recompose(*got.tree), g);
                ASSERT_EQ(tree_parts(*got.tree), orient);
            }
        }
    EXPECT_GT(yes, 100);
    EXPECT_GT(no, 10);
}

TEST(Decompose, RandomRoundTripsUpToTwelve)
{
    std::mt19937_64 rng(37);
    int decomposed = 0;
    for (int t = 0; t < 400; ++t) {
        const Graph g = oracle::random_bipartite(rng, 2 + t % 11, 0.15 + 0.1 * (t % 7));
        const auto parts = *find_bipartition(g);
        const auto r = decompose(g, parts);
        ASSERT_NE(r.status, DecomposeStatus::undecided);
        if (r.status != DecomposeStatus::decomposed) continue;
        ++decomposed;
        ASSERT_EQ(recompose(*r.tree), g);
        ASSERT_EQ(parse_tree(serialize_tree(*r.tree)), *r.tree);
    }
    EXPECT_GT(decomposed, 50);
}

TEST(Tree, SerializeAndParse)
{
    const auto t = DecompositionTree::combine(NodeKind::skew_join, DecompositionTree::leaf(1, true), DecompositionTree::leaf(2, false));
    const std::string text = serialize_tree(t);
    EXPECT_EQ(text, "(skew (x 1) (y 2)\n  (leaf 1 x)\n  (leaf 2 y))\n");
    EXPECT_EQ(parse_tree(text), t);
    EXPECT_EQ(recompose(t), complete(2));
    EXPECT_EQ(t.depth(), 1);
    EXPECT_EQ(DecompositionTree::leaf(3, false).depth(), 0);
}

TEST(Tree, ParseErrors)
{
    EXPECT_THROW(parse_tree(""), ParseError);
    EXPECT_THROW(parse_tree("(leaf 1 z)"), ParseError);
    EXPECT_THROW(parse_tree("(union (x 1) (y)"), ParseError);
    EXPECT_THROW(parse_tree("(leaf 1 x) trailing"), ParseError);
    try {
        parse_tree("(union (x 1) (y)\n  (leaf 1 x)\n  (bogus))");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Tree, RecomposeRejectsMalformed)
{
    // leaf ids must be 1..n
    const auto t = DecompositionTree::combine(NodeKind::disjoint_union, DecompositionTree::leaf(1, true), DecompositionTree::leaf(3, false));
    EXPECT_THROW(recompose(t), InputError);
}

TEST(Letter, GridDecodesToUniversalGrid)
{
    for (int k = 1; k <= 8; ++k)
        for (int m = 1; m <= 8; ++m) {
            const auto rep = letter_representation_grid(k, m);
            const auto grid = universal_grid(k, m);
            ASSERT_EQ(decode_letter(rep), grid.graph) << k << "x" << m;
            ASSERT_TRUE(verify_letter(rep, grid.graph));
        }
}

TEST(Letter, TamperedGraphFailsVerification)
{
    const auto rep = letter_representation_grid(3, 3);
    const auto grid = universal_grid(3, 3);
    GraphBuilder b(grid.graph.order());
    for (const auto& e : grid.graph.edges())
        if (!(e.u == 1 && e.v == 4)) b.add_edge(e.u, e.v);
    EXPECT_FALSE(verify_letter(rep, std::move(b).build()));
    EXPECT_FALSE(verify_letter(rep, universal_grid(3, 4).graph));
}

TEST(Letter, DecoderShape)
{
    const auto rep = letter_representation_grid(3, 2);
    ASSERT_EQ(rep.decoder.size(), 3U);
    EXPECT_EQ(rep.decoder[1][0], DecoderEntry::forward);
    EXPECT_EQ(rep.decoder[0][1], DecoderEntry::backward);
    EXPECT_EQ(rep.decoder[2][0], DecoderEntry::empty);
    EXPECT_EQ(rep.kinds[0], PartKind::independent);
    EXPECT_EQ(decoder_symbol(DecoderEntry::complete), 'C');
    const std::string text = serialize_letter(rep);
    EXPECT_EQ(text.substr(0, 10), "letters 3\n");
}

TEST(Letter, ValidationErrors)
{
    auto rep = letter_representation_grid(2, 2);
    auto dup = rep;
    dup.parts[1][0] = dup.parts[0][0];
    EXPECT_THROW(decode_letter(dup), InputError);
    auto order = rep;
    order.order.pop_back();
    EXPECT_THROW(decode_letter(order), InputError);
    auto mirror = rep;
    mirror.decoder[0][1] = DecoderEntry::forward;
    EXPECT_THROW(decode_letter(mirror), InputError);
    auto clique = rep;
    clique.kinds[0] = PartKind::clique;
    EXPECT_FALSE(verify_letter(clique, universal_grid(2, 2).graph));
}
