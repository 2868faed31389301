#include "wqo/structure.hpp"

#include <algorithm>

#include "wqo/error.hpp"

namespace wqo {

namespace {

void require_independent(const Graph& g, std::span<const Vertex> part)
{
    for (Vertex v : part)
        if (!g.has_vertex(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (g.adjacent(part[i], part[j])) throw InputError("vertex set is not independent");
}

bool comparable(const Graph& g, Vertex u, Vertex v)
{
    return g.neighborhood(u).is_subset_of(g.neighborhood(v)) || g.neighborhood(v).is_subset_of(g.neighborhood(u));
}

void require_order_of(std::span<const Vertex> order, const VertexSet& part)
{
    VertexSet seen(part.capacity());
    for (Vertex v : order) {
        if (v < 1 || v > part.capacity() || !part.contains(v) || seen.contains(v))
            throw InputError("order is not a permutation of its part");
        seen.insert(v);
    }
    if (seen != part) throw InputError("order is not a permutation of its part");
}

/// Neighbourhoods of `side` vertices restricted to `order` must be intervals of it.
bool intervals_in(const Graph& g, const VertexSet& side, std::span<const Vertex> order)
{
    std::vector<int> rank(static_cast<std::size_t>(g.order() + 1), -1);
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    for (Vertex v = side.first(); v != 0; v = side.next(v)) {
        int lo = static_cast<int>(order.size());
        int hi = -1;
        int count = 0;
        const auto& nb = g.neighborhood(v);
        for (Vertex w = nb.first(); w != 0; w = nb.next(w)) {
            int r = rank[static_cast<std::size_t>(w)];
            if (r < 0) continue;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            ++count;
        }
        if (count > 0 && hi - lo + 1 != count) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> first_interval_order(const Graph& g, const VertexSet& ordered,
                                                        const VertexSet& other)
{
    std::vector<Vertex> order = ordered.to_vector();
    do {
        if (intervals_in(g, other, order)) return order;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

} // namespace

NestedResult neighborhoods_nested(const Graph& g, std::span<const Vertex> part)
{
    require_independent(g, part);
    std::vector<Vertex> chain(part.begin(), part.end());
    std::sort(chain.begin(), chain.end(), [&](Vertex a, Vertex b) {
        int da = g.degree(a);
        int db = g.degree(b);
        return da != db ? da < db : a < b;
    });
    NestedResult out;
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!g.neighborhood(chain[i - 1]).is_subset_of(g.neighborhood(chain[i]))) return out;
    out.nested = true;
    out.chain = std::move(chain);
    return out;
}

NestedResult neighborhoods_nested(const Graph& g, const VertexSet& part)
{
    const auto list = part.to_vector();
    return neighborhoods_nested(g, std::span<const Vertex>(list));
}

bool verify_biconvex_order(const Graph& g, const Bipartition& parts, std::span<const Vertex> order_a,
                           std::span<const Vertex> order_b)
{
    if (!parts.valid_for(g)) throw InputError("bipartition is not valid for the graph");
    require_order_of(order_a, parts.part_a());
    require_order_of(order_b, parts.part_b());
    return intervals_in(g, parts.part_b(), order_a) && intervals_in(g, parts.part_a(), order_b);
}

std::optional<BiconvexOrders> find_biconvex_order(const Graph& g, const Bipartition& parts)
{
    if (!parts.valid_for(g)) throw InputError("bipartition is not valid for the graph");
    if (parts.part_a().size() > kBiconvexSearchMaxPart || parts.part_b().size() > kBiconvexSearchMaxPart)
        throw InputError("biconvex order search is limited to parts of at most " +
                         std::to_string(kBiconvexSearchMaxPart) + " vertices");
    auto a = first_interval_order(g, parts.part_a(), parts.part_b());
    if (!a) return std::nullopt;
    auto b = first_interval_order(g, parts.part_b(), parts.part_a());
    if (!b) return std::nullopt;
    return BiconvexOrders{std::move(*a), std::move(*b)};
}

Graph incomparability_graph(const Graph& g, std::span<const Vertex> part)
{
    require_independent(g, part);
    std::vector<Vertex> members(part.begin(), part.end());
    std::sort(members.begin(), members.end());
    const int k = static_cast<int>(members.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        if (g.has_labels()) b.set_label(i + 1, g.label(members[static_cast<std::size_t>(i)]));
        for (int j = i + 1; j < k; ++j)
            if (!comparable(g, members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]))
                b.add_edge(i + 1, j + 1);
    }
    return std::move(b).build();
}

} // namespace wqo
