#include "wqo/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "parallel.hpp"
#include "wqo/enumerate.hpp"
#include "wqo/error.hpp"
#include "wqo/families.hpp"
#include "wqo/graph_io.hpp"
#include "wqo/letter.hpp"
#include "wqo/structure.hpp"

namespace wqo {

const char* verdict_word(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "ok";
    case Verdict::fail: return "FAIL";
    case Verdict::undecided: return "UNDECIDED";
    }
    return "?";
}

int SuiteReport::count(Verdict v) const
{
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [v](const CaseResult& c) { return c.verdict == v; }));
}

Verdict SuiteReport::overall() const
{
    if (count(Verdict::fail) > 0) return Verdict::fail;
    if (count(Verdict::undecided) > 0) return Verdict::undecided;
    return Verdict::pass;
}

namespace {

CaseResult pass(std::string name, std::string detail = {}) { return {std::move(name), Verdict::pass, std::move(detail), {}}; }

CaseResult fail(std::string name, std::string detail, std::string witness)
{
    return {std::move(name), Verdict::fail, std::move(detail), Witness{std::move(witness)}};
}

CaseResult undecided(std::string name, std::string detail) { return {std::move(name), Verdict::undecided, std::move(detail), {}}; }

std::string comment(const std::string& text)
{
    std::string out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out += "# " + line + "\n";
    return out;
}

std::string graph_witness(const std::string& note, const Graph& g, const std::optional<Bipartition>& parts = std::nullopt)
{
    return comment(note) + serialize_graph(g, parts);
}

/// The host's induced image, headed by the vertex map.
std::string embedding_witness(const std::string& note, const Graph& host, const Embedding& e)
{
    std::string map = "map";
    for (Vertex v = 1; v <= e.size(); ++v) map += " " + std::to_string(v) + ":" + std::to_string(e(v));
    std::vector<Vertex> image(e.image().begin(), e.image().end());
    return comment(note + "\n" + map) + serialize_graph(induced_subgraph(host, image));
}

template <typename Fn>
SuiteReport timed(std::string name, Fn&& body)
{
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = std::move(name);
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void require_range(const char* what, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw InputError(std::string(what) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
}

std::string expect_perm(const std::string& what, const Permutation& got, const std::string& want)
{
    return to_string(got) == want ? std::string{} : what + " gave " + to_string(got) + ", expected " + want;
}

bool same_graph(const Graph& g, std::initializer_list<Edge> edges)
{
    std::vector<Edge> want(edges);
    std::sort(want.begin(), want.end());
    return g.edges() == want;
}

/// Edge-by-edge scan of a T-graph against its defining rules.
bool t_layout_ok(const TGraphLayout& t, const Permutation& p)
{
    const int n = p.size();
    for (Vertex u = 1; u <= 4 * n; ++u) {
        for (Vertex v = u + 1; v <= 4 * n; ++v) {
            const auto zu = t.zones[static_cast<std::size_t>(u - 1)];
            const auto zv = t.zones[static_cast<std::size_t>(v - 1)];
            bool want = false;
            if (zu.zone == Zone::A && zv.zone == Zone::B) want = zv.index == p(zu.index);
            if (zu.zone == Zone::A && zv.zone == Zone::D) want = zv.index <= zu.index;
            if (zu.zone == Zone::B && zv.zone == Zone::C) want = zv.index <= zu.index;
            if (zu.zone == Zone::C && zv.zone == Zone::D) want = true;
            if (t.graph.adjacent(u, v) != want) return false;
        }
    }
    return true;
}

bool s_layout_ok(const SGraphLayout& s)
{
    const int n = s.zone_size;
    for (Vertex u = 1; u <= 3 * n; ++u) {
        for (Vertex v = u + 1; v <= 3 * n; ++v) {
            const auto zu = s.zones[static_cast<std::size_t>(u - 1)];
            const auto zv = s.zones[static_cast<std::size_t>(v - 1)];
            bool want = false;
            if (zu.zone == Zone::A && zv.zone == Zone::B) want = zu.index <= s.witness.rho(zv.index);
            if (zu.zone == Zone::B && zv.zone == Zone::C) want = zv.index <= s.witness.mu(zu.index);
            if (s.graph.adjacent(u, v) != want) return false;
        }
    }
    // a_i sees exactly the b_l with rho(l) >= i
    for (int i = 1; i <= n; ++i) {
        VertexSet want(3 * n);
        for (int l = 1; l <= n; ++l)
            if (s.witness.rho(l) >= i) want.insert(s.vertex(Zone::B, l));
        if (s.graph.neighborhood(s.vertex(Zone::A, i)) != want) return false;
    }
    return true;
}

std::vector<Vertex> concat(std::vector<Vertex> a, const std::vector<Vertex>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Neighbourhoods of zone `from` inside the bipartite graph between two zones form a chain.
bool chain_between(const ZonedLayout& t, Zone from, Zone to)
{
    const Graph sub = induced_subgraph(t.graph, concat(t.zone_vertices(from), t.zone_vertices(to)));
    std::vector<Vertex> first(static_cast<std::size_t>(t.zone_size));
    std::iota(first.begin(), first.end(), 1);
    return neighborhoods_nested(sub, first).nested;
}

bool is_complete_bipartite(const Graph& g)
{
    const auto parts = find_bipartition(g);
    return parts && g.edge_count() == static_cast<std::size_t>(parts->part_a().size()) * parts->part_b().size();
}

/// Outcome of one graph in an exhaustive sweep.
struct GraphCheck {
    bool in_universe = false;
    bool undecided = false;
    std::uint64_t items = 0;
    std::optional<std::string> violation;
};

/// Runs `check` on every connected bipartite graph of each order in [lo, hi]
/// and adds one case per order.
template <typename Check>
void sweep(SuiteReport& r, const std::vector<std::vector<Graph>>& levels, int lo, int hi, const SuiteConfig& config,
           const char* item_word, Check&& check)
{
    for (int n = lo; n <= hi; ++n) {
        std::vector<const Graph*> graphs;
        for (const auto& g : levels[static_cast<std::size_t>(n - 1)])
            if (is_connected(g)) graphs.push_back(&g);
        std::vector<GraphCheck> results(graphs.size());
        detail::parallel_for(graphs.size(), config.workers, [&](std::size_t i) { results[i] = check(*graphs[i]); });

        std::size_t universe = 0;
        std::size_t open = 0;
        std::uint64_t items = 0;
        std::optional<std::size_t> first_bad;
        for (std::size_t i = 0; i < results.size(); ++i) {
            universe += results[i].in_universe ? 1 : 0;
            open += results[i].undecided ? 1 : 0;
            items += results[i].items;
            if (results[i].violation && !first_bad) first_bad = i;
        }
        std::ostringstream detail;
        detail << "graphs=" << graphs.size() << " universe=" << universe;
        if (item_word) detail << ' ' << item_word << '=' << items;
        const std::string name = "n=" + std::to_string(n);
        if (first_bad)
            r.cases.push_back(fail(name, detail.str(), graph_witness(*results[*first_bad].violation, *graphs[*first_bad])));
        else if (open > 0)
            r.cases.push_back(undecided(name, detail.str() + " undecided=" + std::to_string(open)));
        else
            r.cases.push_back(pass(name, detail.str()));
    }
}

/// Chords of a path subgraph: pairs at distance >= 2 along the path that are adjacent.
std::vector<std::pair<int, int>> chords(const Graph& g, const std::vector<Vertex>& p)
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j])) out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return out;
}

GraphCheck lemma_key_check(const Graph& g, const SearchOptions& opts)
{
    GraphCheck c;
    static const Graph p7 = path(7);
    static const Graph c4 = cycle(4);
    const auto f = is_free(g, {p7, c4}, opts);
    if (f.verdict == Freeness::undecided) {
        c.undecided = true;
        return c;
    }
    if (!f.is_free()) return c;
    c.in_universe = true;
    if (has_path_subgraph(g, 9)) {
        c.violation = "(P7,C4)-free graph with a 9-vertex path subgraph";
        return c;
    }
    for (const auto& p : simple_paths(g, 7)) {
        ++c.items;
        const auto ch = chords(g, p);
        const bool ok = ch.size() == 1 && (ch[0] == std::pair{1, 6} || ch[0] == std::pair{2, 7});
        if (!ok) {
            std::string path_text;
            for (Vertex v : p) path_text += " " + std::to_string(v);
            c.violation = "7-vertex path" + path_text + " has " + std::to_string(ch.size()) + " chords";
            return c;
        }
    }
    return c;
}

DecompositionTree grow(std::mt19937_64& rng, int depth, Vertex& next_id)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> tenth(0, 9);
    if (depth == 0 || tenth(rng) < 3) return DecompositionTree::leaf(next_id++, coin(rng) == 1);
    static constexpr NodeKind kinds[] = {NodeKind::disjoint_union, NodeKind::join, NodeKind::skew_join};
    const NodeKind kind = kinds[std::uniform_int_distribution<int>(0, 2)(rng)];
    auto first = grow(rng, depth - 1, next_id);
    auto second = grow(rng, depth - 1, next_id);
    return DecompositionTree::combine(kind, std::move(first), std::move(second));
}

std::vector<Permutation> all_permutations(int m)
{
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> sorted_degrees(const Graph& g)
{
    std::vector<int> d;
    for (Vertex v = 1; v <= g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

/// Edge index of {i,j}, 0 <= i < j < n.
int edge_index(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::uint64_t edge_mask(const Graph& g)
{
    std::uint64_t m = 0;
    for (const auto& e : g.edges()) m |= std::uint64_t{1} << edge_index(g.order(), e.u - 1, e.v - 1);
    return m;
}

/// Edge-index images under every relabelling of n vertices.
std::vector<std::vector<int>> edge_relabellings(int n)
{
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> map;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = pi[static_cast<std::size_t>(i)];
                int b = pi[static_cast<std::size_t>(j)];
                map.push_back(edge_index(n, std::min(a, b), std::max(a, b)));
            }
        out.push_back(std::move(map));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

std::uint64_t apply(const std::vector<int>& map, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < map.size(); ++e)
        if (mask >> e & 1U) out |= std::uint64_t{1} << map[e];
    return out;
}

/// Tries every 2-colouring.
bool brute_bipartite(int n, std::uint64_t mask)
{
    for (std::uint32_t colour = 0; colour < (std::uint32_t{1} << n); ++colour) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((mask >> edge_index(n, i, j) & 1U) && ((colour >> i & 1U) == (colour >> j & 1U))) ok = false;
        if (ok) return true;
    }
    return false;
}

bool brute_connected(int n, std::uint64_t mask)
{
    std::uint32_t seen = 1;
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && (seen >> i & 1U) && !(seen >> j & 1U) &&
                    (mask >> edge_index(n, std::min(i, j), std::max(i, j)) & 1U)) {
                    seen |= std::uint32_t{1} << j;
                    grew = true;
                }
    }
    return seen == (std::uint32_t{1} << n) - 1;
}

} // namespace

SuiteReport suite_identities(const SuiteConfig&)
{
    return timed("identities", [](SuiteReport& r) {
        for (int n = 8; n <= 40; n += 2) {
            const auto rho = rho_star(n);
            const auto mu = mu_star(n);
            std::string bad;
            if (!is_convex(rho)) bad = "rho is not convex";
            else if (!is_convex(mu)) bad = "mu is not convex";
            else if (compose(mu, inverse(rho)) != star_perm_s(n)) bad = "mu o rho^-1 differs from the S-family member";
            else if (compose(rho, inverse(rho)) != Permutation::identity(n)) bad = "rho o rho^-1 is not the identity";
            const std::string name = "s-factor/n=" + std::to_string(n);
            r.cases.push_back(bad.empty() ? pass(name)
                                          : fail(name, bad, comment(bad + "\nrho " + to_string(rho) + "\nmu " + to_string(mu))));
        }
        for (int n = 6; n <= 40; n += 2) {
            const auto p = star_perm_t(n);
            const std::string name = "t-involution/n=" + std::to_string(n);
            const bool ok = inverse(p) == p && compose(p, p) == Permutation::identity(n);
            r.cases.push_back(ok ? pass(name) : fail(name, "not an involution", comment(to_string(p))));
        }
    });
}

SuiteReport suite_fidelity(const SuiteConfig&)
{
    return timed("fidelity", [](SuiteReport& r) {
        const std::pair<std::string, std::string> printed[] = {
            {expect_perm("star-t 6", star_perm_t(6), "(4,2,6,1,5,3)"), "star-t/n=6"},
            {expect_perm("star-t 8", star_perm_t(8), "(4,2,6,1,8,3,7,5)"), "star-t/n=8"},
            {expect_perm("star-t 10", star_perm_t(10), "(4,2,6,1,8,3,10,5,9,7)"), "star-t/n=10"},
            {expect_perm("star-s 8", star_perm_s(8), "(2,3,5,1,8,4,7,6)"), "star-s/n=8"},
            {expect_perm("star-s 10", star_perm_s(10), "(2,3,5,1,7,4,10,6,9,8)"), "star-s/n=10"},
            {expect_perm("star-s 12", star_perm_s(12), "(2,3,5,1,7,4,9,6,12,8,11,10)"), "star-s/n=12"},
            {expect_perm("rho 10", rho_star(10), "(1,2,3,5,7,9,10,8,6,4)"), "rho/n=10"},
            {expect_perm("mu 10", mu_star(10), "(2,3,5,7,10,9,8,6,4,1)"), "mu/n=10"},
            {expect_perm("mu o rho^-1 at 10", compose(mu_star(10), inverse(rho_star(10))), "(2,3,5,1,7,4,10,6,9,8)"),
             "factor/n=10"},
        };
        for (const auto& [bad, name] : printed) r.cases.push_back(bad.empty() ? pass(name) : fail(name, bad, comment(bad)));

        const int at3 = compose(mu_star(10), inverse(rho_star(10)))(3);
        r.cases.push_back(at3 == 5 ? pass("factor-at-3") : fail("factor-at-3", "value " + std::to_string(at3), comment("value " + std::to_string(at3))));

        const Graph g4 = permutation_graph(star_perm_t(10));
        const bool adjacency_ok = g4.edge_count() == 14 && g4.neighborhood(2) == VertexSet::of(10, std::vector<Vertex>{1, 4}) &&
                          g4.neighborhood(9) == VertexSet::of(10, std::vector<Vertex>{7, 10});
        r.cases.push_back(adjacency_ok ? pass("perm-graph-t/n=10", "14 edges")
                               : fail("perm-graph-t/n=10", "edge count or adjacency differs", graph_witness("inversion graph", g4)));

        const auto s8 = s_graph(star_perm_s(8), star_witness_s(8));
        const int deg = s8.graph.degree(s8.vertex(Zone::B, 1));
        r.cases.push_back(deg == 3 ? pass("s-graph-b1/n=8")
                                   : fail("s-graph-b1/n=8", "degree " + std::to_string(deg), graph_witness("S-graph", s8.graph, s8.parts)));
    });
}

SuiteReport suite_t_free(const SuiteConfig& config)
{
    return timed("t-free", [&](SuiteReport& r) {
        for (int n = 6; n <= 16; n += 2) {
            const auto p = star_perm_t(n);
            const auto t = t_graph(p);
            std::string bad;
            if (!t_layout_ok(t, p)) bad = "zone rules violated";
            else if (!is_connected(t.graph)) bad = "not connected";
            else if (!chain_between(t, Zone::A, Zone::D)) bad = "A-D edges are not nested";
            else if (!chain_between(t, Zone::B, Zone::C)) bad = "B-C edges are not nested";
            const std::string name = "layout/n=" + std::to_string(n);
            r.cases.push_back(bad.empty() ? pass(name) : fail(name, bad, graph_witness(bad, t.graph, t.parts)));
        }
        const Graph forbidden[] = {two_p3(), sun4()};
        for (int n = 6; n <= 14; n += 2) {
            const auto t = t_graph(star_perm_t(n));
            const auto f = is_free(t.graph, forbidden, config.search());
            const std::string name = "free/n=" + std::to_string(n);
            if (f.verdict == Freeness::free)
                r.cases.push_back(pass(name, "2P3 and Sun4 absent"));
            else if (f.verdict == Freeness::undecided)
                r.cases.push_back(undecided(name, "step budget exhausted"));
            else
                r.cases.push_back(fail(name, f.forbidden_index == 0 ? "2P3 found" : "Sun4 found",
                                       embedding_witness(f.forbidden_index == 0 ? "2P3 image" : "Sun4 image", t.graph, *f.witness)));
        }
    });
}

SuiteReport suite_s_structure(const SuiteConfig& config)
{
    return timed("s-structure", [&](SuiteReport& r) {
        const Graph forbidden[] = {path(8), p_tilde(8)};
        for (int n = 8; n <= 16; n += 2) {
            const auto s = s_graph(star_perm_s(n), star_witness_s(n));
            const std::string tag = "/n=" + std::to_string(n);
            r.cases.push_back(s_layout_ok(s) ? pass("layout" + tag)
                                             : fail("layout" + tag, "zone rules violated", graph_witness("S-graph", s.graph, s.parts)));

            const auto f = is_free(s.graph, forbidden, config.search());
            if (f.verdict == Freeness::free)
                r.cases.push_back(pass("free" + tag, "P8 and P~8 absent"));
            else if (f.verdict == Freeness::undecided)
                r.cases.push_back(undecided("free" + tag, "step budget exhausted"));
            else
                r.cases.push_back(fail("free" + tag, f.forbidden_index == 0 ? "P8 found" : "P~8 found",
                                       embedding_witness("forbidden image", s.graph, *f.witness)));

            // B in natural order; A reversed then C, so the largest A- and
            // C-neighbourhoods meet in the middle.
            auto order_ac = s.zone_vertices(Zone::A);
            std::reverse(order_ac.begin(), order_ac.end());
            order_ac = concat(order_ac, s.zone_vertices(Zone::C));
            const auto order_b = s.zone_vertices(Zone::B);
            if (verify_biconvex_order(s.graph, s.parts, order_ac, order_b)) {
                r.cases.push_back(pass("biconvex" + tag));
            } else {
                std::string orders = "order A+C";
                for (Vertex v : order_ac) orders += " " + std::to_string(v);
                orders += "\norder B";
                for (Vertex v : order_b) orders += " " + std::to_string(v);
                r.cases.push_back(fail("biconvex" + tag, "order rejected", graph_witness(orders, s.graph, s.parts)));
            }
        }
        const auto c6 = find_biconvex_order(cycle(6), odd_even_parts(6));
        r.cases.push_back(!c6 ? pass("cycle6-not-biconvex", "all 36 order pairs rejected")
                              : fail("cycle6-not-biconvex", "an order was accepted", graph_witness("cycle", cycle(6), odd_even_parts(6))));

        for (int n : {8, 10, 12}) {
            const auto s = s_graph(star_perm_s(n), star_witness_s(n));
            const Graph inc = incomparability_graph(s.graph, s.zone_vertices(Zone::B));
            const Graph pg = permutation_graph(star_perm_s(n));
            const std::string name = "incomparability/n=" + std::to_string(n);
            bool iso = false;
            try {
                iso = are_isomorphic(inc, pg, config.search());
            } catch (const SearchBudgetExceeded&) {
                r.cases.push_back(undecided(name, "step budget exhausted"));
                continue;
            }
            r.cases.push_back(iso ? pass(name, "isomorphic to the inversion graph")
                                  : fail(name, "not isomorphic to the inversion graph", graph_witness("incomparability graph of B", inc)));
        }
        const auto s8 = s_graph(star_perm_s(8), star_witness_s(8));
        const Graph inc8 = incomparability_graph(s8.graph, s8.zone_vertices(Zone::B));
        const bool listed = same_graph(inc8, {{1, 8}, {2, 8}, {3, 8}, {3, 7}, {4, 7}, {4, 5}, {4, 6}, {5, 6}});
        r.cases.push_back(listed ? pass("incomparability-edges/n=8")
                                 : fail("incomparability-edges/n=8", "edge set differs", graph_witness("incomparability graph of B", inc8)));
    });
}

SuiteReport antichain_check(std::string_view family, const std::vector<int>& indices, const SuiteConfig& config)
{
    const std::string fam(family);
    const bool perm_family = fam == "permT" || fam == "permS";
    if (!perm_family && fam != "T" && fam != "S" && fam != "H") throw InputError("unknown antichain family '" + fam + "'");
    auto permutation = [&](int i) { return fam == "permT" || fam == "T" ? star_perm_t(i) : star_perm_s(i); };
    auto graph = [&](int i) {
        if (fam == "T") return t_graph(star_perm_t(i)).graph;
        if (fam == "S") return s_graph(star_perm_s(i), star_witness_s(i)).graph;
        return h_antichain(i);
    };
    for (int i : indices) {
        if (fam == "H" ? i < 1 : (i < ((fam == "T" || fam == "permT") ? 6 : 8) || i % 2 != 0))
            throw InputError("invalid index " + std::to_string(i) + " for family " + fam);
    }

    return timed("antichain-" + fam, [&](SuiteReport& r) {
        for (int i : indices) {
            for (int j : indices) {
                if (i == j) continue;
                const std::string name = fam + std::to_string(i) + "-in-" + fam + std::to_string(j);
                if (perm_family) {
                    const auto pattern = permutation(i);
                    const auto host = permutation(j);
                    r.cases.push_back(!contains_pattern(host, pattern)
                                          ? pass(name, "not contained")
                                          : fail(name, "contained", comment("pattern " + to_string(pattern) + "\nhost " + to_string(host))));
                    continue;
                }
                const Graph pattern = graph(i);
                const Graph host = graph(j);
                const auto e = find_induced_embedding(pattern, host, config.search());
                const std::string steps = "steps=" + std::to_string(e.steps);
                if (e.status == SearchStatus::none)
                    r.cases.push_back(pass(name, "no induced embedding, " + steps));
                else if (e.status == SearchStatus::undecided)
                    r.cases.push_back(undecided(name, "step budget exhausted, " + steps));
                else
                    r.cases.push_back(fail(name, "induced embedding found", embedding_witness(name, host, *e.embedding)));
            }
        }
    });
}

SuiteReport suite_t_antichain(const SuiteConfig& config)
{
    auto r = antichain_check("T", config.t_pair, config);
    r.suite = "t-antichain";
    return r;
}

SuiteReport suite_s_antichain(const SuiteConfig& config)
{
    auto r = antichain_check("S", config.s_pair, config);
    r.suite = "s-antichain";
    return r;
}

SuiteReport suite_perm_antichain(const SuiteConfig& config)
{
    return timed("perm-antichain", [&](SuiteReport& r) {
        for (auto [fam, idx] : {std::pair<const char*, std::vector<int>>{"permT", {6, 8, 10, 12}}, {"permS", {8, 10, 12, 14}}}) {
            auto part = antichain_check(fam, idx, config);
            for (auto& c : part.cases) r.cases.push_back(std::move(c));
        }
    });
}

SuiteReport suite_h_antichain(const SuiteConfig& config)
{
    auto r = antichain_check("H", {1, 2, 3, 4, 5, 6}, config);
    r.suite = "h-antichain";
    return r;
}

SuiteReport suite_lemma_key(const SuiteConfig& config)
{
    require_range("lemma-key n_max", config.lemma_key_nmax, 9, 12);
    return timed("lemma-key", [&](SuiteReport& r) {
        const auto opts = config.search();
        const auto s = lemma_key_check(s123(), opts);
        r.cases.push_back(s.in_universe && !s.violation ? pass("spot/s123", "in universe, no 9-vertex path")
                                                        : fail("spot/s123", "expected (P7,C4)-free without violations", graph_witness("s123", s123())));
        const Graph c8 = cycle(8);
        const bool c8_ok = find_induced_embedding(cycle(4), c8, opts).status == SearchStatus::none &&
                           find_induced_embedding(path(7), c8, opts).found() && !lemma_key_check(c8, opts).in_universe;
        r.cases.push_back(c8_ok ? pass("spot/cycle8", "C4-free, contains P7, excluded")
                                : fail("spot/cycle8", "filter misclassified C8", graph_witness("cycle", c8)));
        const auto levels = bipartite_levels(config.lemma_key_nmax);
        sweep(r, levels, 9, config.lemma_key_nmax, config, "p7-subgraphs", [&](const Graph& g) { return lemma_key_check(g, opts); });
    });
}

SuiteReport suite_lemma_reduction(const SuiteConfig& config)
{
    require_range("lemma-reduction n_max", config.lemma_reduction_nmax, 1, 12);
    return timed("lemma-reduction", [&](SuiteReport& r) {
        const auto opts = config.search();
        const Graph p7 = path(7);
        const Graph s1 = sun1();
        const Graph c4 = cycle(4);
        auto check = [&](const Graph& g) {
            GraphCheck c;
            const auto f = is_free(g, {p7, s1}, opts);
            const auto has_c4 = find_induced_embedding(c4, g, opts);
            if (f.verdict == Freeness::undecided || has_c4.status == SearchStatus::undecided) {
                c.undecided = true;
                return c;
            }
            if (!f.is_free() || !has_c4.found()) return c;
            c.in_universe = true;
            if (!is_complete_bipartite(g)) c.violation = "(P7,Sun1)-free with an induced C4 but not complete bipartite";
            return c;
        };
        const Graph k33 = complete_bipartite(3, 3).graph;
        const auto k = check(k33);
        r.cases.push_back(k.in_universe && !k.violation ? pass("spot/k33") : fail("spot/k33", "K3,3 misclassified", graph_witness("K3,3", k33)));
        const auto sun = check(s1);
        const bool sun_excluded = !sun.in_universe && find_induced_embedding(c4, s1, opts).found();
        r.cases.push_back(sun_excluded ? pass("spot/sun1", "contains C4, excluded")
                                       : fail("spot/sun1", "Sun1 misclassified", graph_witness("Sun1", s1)));
        const auto levels = bipartite_levels(config.lemma_reduction_nmax);
        sweep(r, levels, 1, config.lemma_reduction_nmax, config, nullptr, check);
    });
}

DecompositionTree random_tree(std::mt19937_64& rng, int max_depth)
{
    Vertex next = 1;
    return grow(rng, max_depth, next);
}

BipartiteGraph compose_tree(const DecompositionTree& tree)
{
    if (tree.kind == NodeKind::leaf) {
        const bool x = !tree.xs.empty();
        return {Graph(1), Bipartition(x ? VertexSet::all(1) : VertexSet(1), x ? VertexSet(1) : VertexSet::all(1))};
    }
    const auto a = compose_tree(tree.children[0]);
    const auto b = compose_tree(tree.children[1]);
    switch (tree.kind) {
    case NodeKind::disjoint_union: return disjoint_union(a, b);
    case NodeKind::join: return join(a, b);
    default: return skew_join(a, b);
    }
}

SuiteReport suite_closure(const SuiteConfig& config)
{
    require_range("closure n_max", config.closure_nmax, 1, 12);
    return timed("closure", [&](SuiteReport& r) {
        const auto opts = config.search();
        const Graph p7 = path(7);
        const Graph s = s123();

        const auto d7 = decompose(p7, odd_even_parts(7));
        r.cases.push_back(d7.status == DecomposeStatus::not_decomposable
                              ? pass("path7-rejected")
                              : fail("path7-rejected", "path(7) was decomposed",
                                     comment("tree") + comment(d7.tree ? serialize_tree(*d7.tree) : std::string{}) + serialize_graph(p7)));

        std::mt19937_64 rng(config.seed);
        int failures = 0;
        std::string first_bad;
        int largest = 0;
        int open = 0;
        for (int t = 0; t < config.random_trees; ++t) {
            const auto tree = random_tree(rng, config.random_tree_depth);
            largest = std::max(largest, tree.vertex_count());
            const Graph g = recompose(tree);
            std::string bad;
            if (compose_tree(tree).graph != g) bad = "recompose differs from the composed operations";
            const auto f = is_free(g, {p7, s}, opts);
            if (bad.empty() && f.verdict == Freeness::undecided) {
                ++open;
                continue;
            }
            if (bad.empty() && !f.is_free()) bad = "graph contains P7 or S123";
            if (bad.empty() && g.order() <= kDecomposeMaxOrder) {
                const auto d = decompose(g, tree_parts(tree));
                if (d.status != DecomposeStatus::decomposed || recompose(*d.tree) != g) bad = "decompose did not round-trip";
            }
            if (!bad.empty() && failures++ == 0) first_bad = comment(bad) + serialize_tree(tree);
        }
        const std::string detail = "trees=" + std::to_string(config.random_trees) + " largest=" + std::to_string(largest);
        if (failures > 0)
            r.cases.push_back(fail("random-trees", detail + " failures=" + std::to_string(failures), first_bad));
        else if (open > 0)
            r.cases.push_back(undecided("random-trees", detail + " undecided=" + std::to_string(open)));
        else
            r.cases.push_back(pass("random-trees", detail));

        const auto levels = bipartite_levels(config.closure_nmax);
        sweep(r, levels, 1, config.closure_nmax, config, nullptr, [&](const Graph& g) {
            GraphCheck c;
            const auto f = is_free(g, {p7, s}, opts);
            if (f.verdict == Freeness::undecided) {
                c.undecided = true;
                return c;
            }
            if (!f.is_free()) return c;
            c.in_universe = true;
            const auto parts = *find_bipartition(g);
            const auto d = decompose(g, parts);
            if (d.status == DecomposeStatus::undecided)
                c.undecided = true;
            else if (d.status != DecomposeStatus::decomposed)
                c.violation = "(P7,S123)-free graph without a decomposition";
            else if (recompose(*d.tree) != g || tree_parts(*d.tree) != parts)
                c.violation = "decomposition does not recompose to the graph";
            return c;
        });
    });
}

GridPermutation grid_permutation(int rows, int cols)
{
    if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
    // Each vertex is a segment from (x, top) to (y, bottom). Consecutive rows
    // are offset so that v_{i,j} crosses exactly v_{i+1,1..j}.
    const int n = rows * cols;
    const long shift = 20L * (cols - 1) + 5;
    std::vector<long> x(static_cast<std::size_t>(n + 1));
    std::vector<long> y(static_cast<std::size_t>(n + 1));
    long a = 0;
    long b = 0;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            x[static_cast<std::size_t>(grid_vertex(cols, i, j))] = 20L * j + a;
            y[static_cast<std::size_t>(grid_vertex(cols, i, j))] = 20L * j + b;
        }
        if (i % 2 == 1) {
            a -= 2;
            b += shift;
        } else {
            a += shift;
            b -= 2;
        }
    }
    auto ranks = [&](const std::vector<long>& key) {
        std::vector<Vertex> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 1);
        std::sort(idx.begin(), idx.end(), [&](Vertex u, Vertex v) { return key[static_cast<std::size_t>(u)] < key[static_cast<std::size_t>(v)]; });
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (key[static_cast<std::size_t>(idx[k - 1])] == key[static_cast<std::size_t>(idx[k])])
                throw std::logic_error("segment endpoints collide");
        std::vector<int> rank(static_cast<std::size_t>(n + 1));
        for (std::size_t k = 0; k < idx.size(); ++k) rank[static_cast<std::size_t>(idx[k])] = static_cast<int>(k + 1);
        return rank;
    };
    const auto xr = ranks(x);
    const auto yr = ranks(y);
    std::vector<int> oneline(static_cast<std::size_t>(n));
    std::vector<Vertex> image(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        oneline[static_cast<std::size_t>(yr[static_cast<std::size_t>(v)] - 1)] = xr[static_cast<std::size_t>(v)];
        image[static_cast<std::size_t>(v - 1)] = xr[static_cast<std::size_t>(v)];
    }
    return {Permutation(std::move(oneline)), std::move(image)};
}

SuiteReport suite_universality(const SuiteConfig& config)
{
    require_range("universality m_max", config.universality_mmax, 1, 6);
    return timed("universality", [&](SuiteReport& r) {
        const auto opts = config.search();
        const Graph p4 = path(4);
        for (int m = 1; m <= config.universality_mmax; ++m) {
            const Graph grid = universal_grid(m, m).graph;
            const auto perms = all_permutations(m);
            struct Outcome {
                bool bipartite = false;
                SearchStatus status = SearchStatus::none;
                bool rows_ok = true;
            };
            std::vector<Outcome> out(perms.size());
            detail::parallel_for(perms.size(), config.workers, [&](std::size_t i) {
                const Graph g = permutation_graph(perms[i]);
                if (!find_bipartition(g)) return;
                out[i].bipartite = true;
                const auto e = find_induced_embedding(g, grid, {config.step_budget, 1});
                out[i].status = e.status;
                if (e.found() && is_connected(g) && is_free(g, {p4}, {config.step_budget, 1}).is_free()) {
                    std::set<int> rows;
                    for (Vertex v : e.embedding->image()) rows.insert((v - 1) / m + 1);
                    out[i].rows_ok = static_cast<int>(rows.size()) <= 4 && *rows.rbegin() - *rows.begin() + 1 == static_cast<int>(rows.size());
                }
            });
            std::size_t bip = 0;
            std::size_t open = 0;
            std::optional<std::size_t> bad;
            for (std::size_t i = 0; i < out.size(); ++i) {
                bip += out[i].bipartite ? 1 : 0;
                open += out[i].status == SearchStatus::undecided ? 1 : 0;
                if (out[i].bipartite && (out[i].status == SearchStatus::none || !out[i].rows_ok) && !bad) bad = i;
            }
            const std::string name = "embed/m=" + std::to_string(m);
            const std::string detail = "permutations=" + std::to_string(perms.size()) + " bipartite=" + std::to_string(bip);
            if (bad)
                r.cases.push_back(fail(name, detail, graph_witness("inversion graph of " + to_string(perms[*bad]) +
                                                                       (out[*bad].status == SearchStatus::none ? " does not embed" : " spans too many rows"),
                                                                   permutation_graph(perms[*bad]))));
            else if (open > 0)
                r.cases.push_back(undecided(name, detail + " undecided=" + std::to_string(open)));
            else
                r.cases.push_back(pass(name, detail));
        }

        std::string bad;
        for (int k = 1; k <= 8 && bad.empty(); ++k)
            for (int m = 1; m <= 8 && bad.empty(); ++m) {
                const auto gp = grid_permutation(k, m);
                if (relabel(universal_grid(k, m).graph, gp.image) != permutation_graph(gp.perm))
                    bad = "grid " + std::to_string(k) + "x" + std::to_string(m) + " via " + to_string(gp.perm);
            }
        r.cases.push_back(bad.empty() ? pass("grid-permutation/k,m<=8") : fail("grid-permutation/k,m<=8", "relabelled grid differs", comment(bad)));

        for (int m = 1; m <= 3; ++m) {
            const Graph grid = universal_grid(m, m).graph;
            const auto degrees = sorted_degrees(grid);
            std::vector<int> v(static_cast<std::size_t>(m * m));
            std::iota(v.begin(), v.end(), 1);
            std::optional<Permutation> hit;
            do {
                Permutation p(v);
                const Graph g = permutation_graph(p);
                if (g.edge_count() == grid.edge_count() && sorted_degrees(g) == degrees && are_isomorphic(g, grid, opts)) hit = p;
            } while (!hit && std::next_permutation(v.begin(), v.end()));
            const std::string name = "grid-permutation-search/m=" + std::to_string(m);
            r.cases.push_back(hit ? pass(name, "realised by " + to_string(*hit))
                                  : fail(name, "no permutation of size " + std::to_string(m * m), graph_witness("grid", grid)));
        }
    });
}

SuiteReport suite_letter(const SuiteConfig& config)
{
    return timed("letter", [&](SuiteReport& r) {
        for (int k = 1; k <= config.letter_max; ++k) {
            std::string bad;
            for (int m = 1; m <= config.letter_max && bad.empty(); ++m) {
                const auto rep = letter_representation_grid(k, m);
                const auto grid = universal_grid(k, m);
                if (decode_letter(rep) != grid.graph) bad = "decoded graph differs for m=" + std::to_string(m);
                else if (!verify_letter(rep, grid.graph)) bad = "decoder check rejects the grid for m=" + std::to_string(m);
                else if (grid.graph.edge_count() > 0) {
                    const auto edges = grid.graph.edges();
                    GraphBuilder b(grid.graph.order());
                    for (std::size_t i = 1; i < edges.size(); ++i) b.add_edge(edges[i].u, edges[i].v);
                    if (verify_letter(rep, std::move(b).build())) bad = "decoder check accepts a graph missing an edge for m=" + std::to_string(m);
                }
                if (!bad.empty()) bad += "\n" + serialize_letter(rep);
            }
            const std::string name = "grid/k=" + std::to_string(k);
            r.cases.push_back(bad.empty() ? pass(name, "m=1.." + std::to_string(config.letter_max)) : fail(name, "letter mismatch", comment(bad)));
        }
    });
}

std::uint64_t brute_canonical_mask(const Graph& g)
{
    if (g.order() > 8) throw InputError("brute-force canonical key supports at most 8 vertices");
    const auto mask = edge_mask(g);
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& map : edge_relabellings(g.order())) best = std::min(best, apply(map, mask));
    return best;
}

std::pair<std::size_t, std::size_t> brute_bipartite_counts(int n)
{
    require_range("brute-force order", n, 1, 7);
    const int edges = n * (n - 1) / 2;
    const auto maps = edge_relabellings(n);
    std::vector<bool> seen(std::size_t{1} << edges, false);
    std::size_t all = 0;
    std::size_t connected = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        if (seen[mask]) continue;
        for (const auto& map : maps) seen[apply(map, mask)] = true;
        if (!brute_bipartite(n, mask)) continue;
        ++all;
        connected += brute_connected(n, mask) ? 1 : 0;
    }
    return {all, connected};
}

SuiteReport suite_enum_calibration(const SuiteConfig& config)
{
    require_range("calibration n_max", config.calibration_nmax, 1, 6);
    return timed("enum-calibration", [&](SuiteReport& r) {
        const auto levels = bipartite_levels(config.calibration_nmax);
        for (int n = 1; n <= config.calibration_nmax; ++n) {
            const auto& level = levels[static_cast<std::size_t>(n - 1)];
            const auto [all, connected] = brute_bipartite_counts(n);
            std::set<std::uint64_t> keys;
            std::size_t conn = 0;
            for (const auto& g : level) {
                keys.insert(brute_canonical_mask(g));
                conn += is_connected(g) ? 1 : 0;
            }
            std::ostringstream detail;
            detail << "enumerated=" << level.size() << "/" << conn << " brute-force=" << all << "/" << connected;
            const bool ok = level.size() == all && conn == connected && keys.size() == level.size();
            const std::string name = "n=" + std::to_string(n);
            r.cases.push_back(ok ? pass(name, detail.str()) : fail(name, detail.str(), comment(detail.str())));
        }
    });
}

std::vector<std::vector<Vertex>> simple_paths(const Graph& g, int k)
{
    std::vector<std::vector<Vertex>> out;
    if (k < 1) return out;
    std::vector<Vertex> path;
    VertexSet used(g.order());
    auto dfs = [&](auto&& self, Vertex v) -> void {
        path.push_back(v);
        used.insert(v);
        if (static_cast<int>(path.size()) == k) {
            if (k == 1 || path.front() < path.back()) out.push_back(path);
        } else {
            const auto& nb = g.neighborhood(v);
            for (Vertex w = nb.first(); w != 0; w = nb.next(w))
                if (!used.contains(w)) self(self, w);
        }
        used.erase(v);
        path.pop_back();
    };
    for (Vertex v = 1; v <= g.order(); ++v) dfs(dfs, v);
    return out;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "identities",  "fidelity",    "t-free",    "t-antichain",     "s-structure",
        "s-antichain", "perm-antichain", "h-antichain", "lemma-key", "lemma-reduction",
        "universality", "closure",    "letter",    "enum-calibration",
    };
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config)
{
    static const std::map<std::string, SuiteReport (*)(const SuiteConfig&), std::less<>> table{
        {"identities", suite_identities},
        {"fidelity", suite_fidelity},
        {"t-free", suite_t_free},
        {"t-antichain", suite_t_antichain},
        {"s-structure", suite_s_structure},
        {"s-antichain", suite_s_antichain},
        {"perm-antichain", suite_perm_antichain},
        {"h-antichain", suite_h_antichain},
        {"lemma-key", suite_lemma_key},
        {"lemma-reduction", suite_lemma_reduction},
        {"universality", suite_universality},
        {"closure", suite_closure},
        {"letter", suite_letter},
        {"enum-calibration", suite_enum_calibration},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw InputError("unknown suite '" + std::string(name) + "'");
    return it->second(config);
}

std::vector<SuiteReport> run_all_suites(const SuiteConfig& config)
{
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
    return out;
}

} // namespace wqo
