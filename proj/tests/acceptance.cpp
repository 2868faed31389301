// Acceptance run: one PASS/FAIL line per criterion with its time bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "wqo/families.hpp"
#include "wqo/letter.hpp"
#include "wqo/matcher.hpp"
#include "wqo/perm.hpp"
#include "wqo/structure.hpp"
#include "wqo/suites.hpp"

using namespace wqo;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

bool suite_passes(const SuiteReport& r, Outcome& out)
{
    for (const auto& c : r.cases)
        if (c.verdict != Verdict::pass) {
            out.require(false, r.suite + "/" + c.name + " " + verdict_word(c.verdict) + " " + c.detail);
            return false;
        }
    return true;
}

std::vector<Permutation> permutations_of(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Outcome identities()
{
    Outcome o;
    for (int n = 8; n <= 40; n += 2) {
        o.require(compose(mu_star(n), inverse(rho_star(n))) == star_perm_s(n), "factorisation n=" + std::to_string(n));
        o.require(is_convex(rho_star(n)) && is_convex(mu_star(n)), "convexity n=" + std::to_string(n));
    }
    for (int n = 6; n <= 40; n += 2) o.require(compose(star_perm_t(n), star_perm_t(n)) == Permutation::identity(n), "involution n=" + std::to_string(n));
    return o;
}

Outcome fidelity()
{
    Outcome o;
    o.require(to_string(star_perm_t(6)) == "(4,2,6,1,5,3)", "T6");
    o.require(to_string(star_perm_t(8)) == "(4,2,6,1,8,3,7,5)", "T8");
    o.require(to_string(star_perm_s(8)) == "(2,3,5,1,8,4,7,6)", "S8");
    o.require(to_string(star_perm_s(10)) == "(2,3,5,1,7,4,10,6,9,8)", "S10");
    o.require(to_string(star_perm_s(12)) == "(2,3,5,1,7,4,9,6,12,8,11,10)", "S12");
    return o;
}

Outcome freeness()
{
    Outcome o;
    for (int n = 6; n <= 14; n += 2)
        o.require(is_free(t_graph(star_perm_t(n)).graph, {two_p3(), sun4()}).verdict == Freeness::free, "T n=" + std::to_string(n));
    for (int n = 8; n <= 16; n += 2)
        o.require(is_free(s_graph(star_perm_s(n), star_witness_s(n)).graph, {path(8), p_tilde(8)}).verdict == Freeness::free,
                  "S n=" + std::to_string(n));
    return o;
}

Outcome perm_antichain()
{
    Outcome o;
    for (const auto& fam : {std::vector<Permutation>{star_perm_t(6), star_perm_t(8), star_perm_t(10), star_perm_t(12)},
                            std::vector<Permutation>{star_perm_s(8), star_perm_s(10), star_perm_s(12), star_perm_s(14)}})
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = 0; j < fam.size(); ++j)
                if (i != j) o.require(!contains_pattern(fam[j], fam[i]), to_string(fam[i]) + " in " + to_string(fam[j]));
    return o;
}

Outcome graph_antichain()
{
    Outcome o;
    auto pair = [&](const Graph& a, const Graph& b, const std::string& name) {
        const auto e = find_induced_embedding(a, b);
        o.require(e.status == SearchStatus::none, name + (e.status == SearchStatus::undecided ? " undecided" : " embeds"));
    };
    const Graph t6 = t_graph(star_perm_t(6)).graph;
    const Graph t8 = t_graph(star_perm_t(8)).graph;
    const Graph s8 = s_graph(star_perm_s(8), star_witness_s(8)).graph;
    const Graph s10 = s_graph(star_perm_s(10), star_witness_s(10)).graph;
    pair(t6, t8, "T6 in T8");
    pair(t8, t6, "T8 in T6");
    pair(s8, s10, "S8 in S10");
    pair(s10, s8, "S10 in S8");
    return o;
}

Outcome inversion_t10()
{
    Outcome o;
    const Graph g = permutation_graph(star_perm_t(10));
    o.require(g.edge_count() == 14, "edge count " + std::to_string(g.edge_count()));
    o.require(g.neighborhood(2).to_vector() == std::vector<Vertex>{1, 4}, "vertex 2");
    o.require(g.neighborhood(9).to_vector() == std::vector<Vertex>{7, 10}, "vertex 9");
    return o;
}

Outcome incomparability()
{
    Outcome o;
    for (int n : {8, 10, 12}) {
        const auto s = s_graph(star_perm_s(n), star_witness_s(n));
        o.require(are_isomorphic(incomparability_graph(s.graph, s.zone_vertices(Zone::B)), permutation_graph(star_perm_s(n))),
                  "n=" + std::to_string(n));
    }
    const auto s8 = s_graph(star_perm_s(8), star_witness_s(8));
    const std::vector<Edge> want{{1, 8}, {2, 8}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {4, 7}, {5, 6}};
    o.require(incomparability_graph(s8.graph, s8.zone_vertices(Zone::B)).edges() == want, "n=8 edge list");
    return o;
}

Outcome biconvexity()
{
    Outcome o;
    for (int n = 8; n <= 16; n += 2) {
        const auto s = s_graph(star_perm_s(n), star_witness_s(n));
        auto ac = s.zone_vertices(Zone::A);
        std::reverse(ac.begin(), ac.end());
        for (Vertex v : s.zone_vertices(Zone::C)) ac.push_back(v);
        o.require(verify_biconvex_order(s.graph, s.parts, ac, s.zone_vertices(Zone::B)), "n=" + std::to_string(n));
    }
    o.require(!find_biconvex_order(cycle(6), odd_even_parts(6)), "cycle(6) accepted");
    return o;
}

Outcome from_suite(const char* name, const SuiteConfig& cfg)
{
    Outcome o;
    suite_passes(run_suite(name, cfg), o);
    return o;
}

Outcome letters()
{
    Outcome o;
    for (int k = 1; k <= 8; ++k)
        for (int m = 1; m <= 8; ++m) {
            const auto rep = letter_representation_grid(k, m);
            const auto grid = universal_grid(k, m);
            const std::string tag = std::to_string(k) + "x" + std::to_string(m);
            o.require(decode_letter(rep) == grid.graph, "decode " + tag);
            o.require(verify_letter(rep, grid.graph), "verify " + tag);
        }
    return o;
}

Outcome universality()
{
    Outcome o;
    const Graph grid = universal_grid(6, 6).graph;
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : permutations_of(n)) {
            const Graph g = permutation_graph(p);
            if (!find_bipartition(g)) continue;
            o.require(find_induced_embedding(g, grid).found(), to_string(p));
        }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double bound_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    SuiteConfig full;
    full.lemma_key_nmax = 11;
    full.lemma_reduction_nmax = 10;
    full.closure_nmax = 10;
    full.random_trees = 300;
    full.calibration_nmax = 6;

    const std::vector<Criterion> criteria{
        {1, "identities", 1, identities},
        {2, "printed instances", 1, fidelity},
        {3, "freeness", 300, freeness},
        {4, "permutation antichain", 60, perm_antichain},
        {5, "graph antichain", 1800, graph_antichain},
        {6, "inversion graph of T10", 1, inversion_t10},
        {7, "incomparability graph", 10, incomparability},
        {8, "biconvexity", 60, biconvexity},
        {9, "lemma key", 1800, [&] { return from_suite("lemma-key", full); }},
        {10, "lemma reduction", 600, [&] { return from_suite("lemma-reduction", full); }},
        {11, "closure", 1200, [&] { return from_suite("closure", full); }},
        {12, "letter graphs", 10, letters},
        {13, "universality", 300, universality},
        {14, "enumerator calibration", 60, [&] { return from_suite("enum-calibration", full); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.bound_seconds;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s criterion %d (%s) %.3fs %s %.0fs", pass ? "PASS" : "FAIL", c.id, c.title, secs, in_time ? "<" : ">=", c.bound_seconds);
        if (!o.ok) std::printf(" [%s]", o.note.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
