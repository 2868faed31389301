#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

struct NestedResult {
    bool nested = false;
    /// Members of the part by non-decreasing neighbourhood, ties by id; filled
    /// only when `nested` holds.
    std::vector<Vertex> chain;
};

/// Whether the neighbourhoods of an independent vertex set form a chain under
/// inclusion. Throws InputError when `part` is not independent.
NestedResult neighborhoods_nested(const Graph& g, std::span<const Vertex> part);
NestedResult neighborhoods_nested(const Graph& g, const VertexSet& part);

/// Every vertex's neighbourhood is consecutive in the order of the opposite
/// part. Throws InputError when an order is not a permutation of its part.
bool verify_biconvex_order(const Graph& g, const Bipartition& parts, std::span<const Vertex> order_a,
                           std::span<const Vertex> order_b);

struct BiconvexOrders {
    std::vector<Vertex> order_a;
    std::vector<Vertex> order_b;
};

inline constexpr int kBiconvexSearchMaxPart = 8;

/// Exhaustive search, lexicographically first passing order for each part.
/// The two orders are independent: the order of A only has to make the
/// B-vertices' neighbourhoods intervals and vice versa. Throws InputError when
/// a part has more than kBiconvexSearchMaxPart vertices.
std::optional<BiconvexOrders> find_biconvex_order(const Graph& g, const Bipartition& parts);

/// Vertices are the members of `part` in ascending order, relabelled 1..|part|
/// (labels carried over); two are adjacent iff neither neighbourhood contains
/// the other. Throws InputError when `part` is not independent.
Graph incomparability_graph(const Graph& g, std::span<const Vertex> part);

} // namespace wqo
