#include "wqo/enumerate.hpp"

#include <algorithm>
#include <map>

#include "wqo/canonical.hpp"
#include "wqo/error.hpp"

namespace wqo {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kEnumerateMaxOrder)
        throw InputError("enumeration supports 1.." + std::to_string(kEnumerateMaxOrder) + " vertices");
}

/// Every neighbourhood for a new vertex that keeps the graph bipartite: per
/// component, nothing, or a nonempty subset of one side.
std::vector<std::vector<Vertex>> bipartite_neighbourhoods(const Graph& g)
{
    const auto parts = find_bipartition(g);
    if (!parts) throw InputError("parent graph is not bipartite");
    std::vector<std::vector<std::vector<Vertex>>> options;
    for (const auto& comp : connected_components(g)) {
        std::vector<Vertex> side[2];
        for (Vertex v : comp) side[parts->in_a(v) ? 0 : 1].push_back(v);
        std::vector<std::vector<Vertex>> choice{{}};
        for (const auto& s : side) {
            for (std::uint32_t m = 1; m < (std::uint32_t{1} << s.size()); ++m) {
                std::vector<Vertex> pick;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (m >> i & 1U) pick.push_back(s[i]);
                choice.push_back(std::move(pick));
            }
        }
        options.push_back(std::move(choice));
    }
    std::vector<std::vector<Vertex>> out{{}};
    for (const auto& choice : options) {
        std::vector<std::vector<Vertex>> next;
        next.reserve(out.size() * choice.size());
        for (const auto& base : out)
            for (const auto& c : choice) {
                auto s = base;
                s.insert(s.end(), c.begin(), c.end());
                next.push_back(std::move(s));
            }
        out = std::move(next);
    }
    return out;
}

/// (degree, sum of neighbour degrees): the canonical last vertex is taken among
/// the maximisers, which lets most children be rejected without a labelling.
std::pair<int, int> vertex_key(const Graph& g, Vertex v)
{
    int s = 0;
    const auto& nb = g.neighborhood(v);
    for (Vertex w = nb.first(); w != 0; w = nb.next(w)) s += g.degree(w);
    return {g.degree(v), s};
}

std::vector<Graph> children(const Graph& parent)
{
    const int n = parent.order() + 1;
    std::map<CanonicalForm, Graph> accepted;
    std::vector<Graph> out;
    for (const auto& nb : bipartite_neighbourhoods(parent)) {
        GraphBuilder b(n);
        for (const auto& e : parent.edges()) b.add_edge(e.u, e.v);
        for (Vertex v : nb) b.add_edge(v, n);
        Graph child = std::move(b).build();

        const auto key = vertex_key(child, n);
        bool maximal = true;
        for (Vertex v = 1; v < n && maximal; ++v) maximal = !(key < vertex_key(child, v));
        if (!maximal) continue;

        auto lab = canonical_labeling(child);
        Vertex last = 0;
        for (auto it = lab.order.rbegin(); it != lab.order.rend(); ++it)
            if (vertex_key(child, *it) == key) {
                last = *it;
                break;
            }
        if (!same_orbit(child, lab, n, last)) continue;
        if (accepted.emplace(std::move(lab.form), child).second) out.push_back(std::move(child));
    }
    return out;
}

} // namespace

std::vector<Graph> extend_bipartite(const std::vector<Graph>& parents)
{
    std::vector<Graph> out;
    for (const auto& p : parents) {
        auto c = children(p);
        std::move(c.begin(), c.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<std::vector<Graph>> bipartite_levels(int n_max)
{
    check_order(n_max);
    std::vector<std::vector<Graph>> levels{{Graph(1)}};
    while (static_cast<int>(levels.size()) < n_max) levels.push_back(extend_bipartite(levels.back()));
    return levels;
}

EnumerationStream::EnumerationStream(int n, bool connected_only) : n_(n), connected_only_(connected_only)
{
    check_order(n);
    if (n == 1)
        buffer_.push_back(Graph(1));
    else
        parents_ = std::move(bipartite_levels(n - 1).back());
}

std::optional<Graph> EnumerationStream::next()
{
    for (;;) {
        while (pos_ < buffer_.size()) {
            Graph& g = buffer_[pos_++];
            if (!connected_only_ || is_connected(g)) return std::move(g);
        }
        if (parent_ >= parents_.size()) return std::nullopt;
        buffer_ = children(parents_[parent_++]);
        pos_ = 0;
    }
}

std::vector<Graph> enumerate_bipartite(int n, bool connected_only)
{
    EnumerationStream s(n, connected_only);
    std::vector<Graph> out;
    while (auto g = s.next()) out.push_back(std::move(*g));
    return out;
}

} // namespace wqo
