#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

// The three bipartite compositions. Operand parts are (X_i, Y_i) =
// (part_a, part_b). Vertices of the first operand keep their ids, those of the
// second are shifted by its order, and the result has parts (X1+X2, Y1+Y2).

BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2);
/// Bipartite complement of the disjoint union of the operands' complements.
BipartiteGraph join(const BipartiteGraph& g1, const BipartiteGraph& g2);
/// Disjoint union plus every edge from X1 to Y2.
BipartiteGraph skew_join(const BipartiteGraph& g1, const BipartiteGraph& g2);

enum class NodeKind { leaf, disjoint_union, join, skew_join };

/// Certificate that a graph is built from single vertices by the three
/// compositions. Every node records its own vertices on each side; leaves hold
/// exactly one vertex. Operands may have an empty side but never zero vertices.
struct DecompositionTree {
    NodeKind kind = NodeKind::leaf;
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    std::vector<DecompositionTree> children; ///< empty for leaves, two otherwise

    static DecompositionTree leaf(Vertex v, bool in_x);
    static DecompositionTree combine(NodeKind kind, DecompositionTree first, DecompositionTree second);

    int vertex_count() const noexcept { return static_cast<int>(xs.size() + ys.size()); }
    int depth() const noexcept;

    friend bool operator==(const DecompositionTree&, const DecompositionTree&) = default;
};

/// Rebuilds the graph on the leaf ids, which must be exactly 1..leaf count.
/// Throws InputError on a malformed tree.
Graph recompose(const DecompositionTree& tree);
/// Parts as recorded by the root: X is part A.
Bipartition tree_parts(const DecompositionTree& tree);

enum class DecomposeStatus { decomposed, not_decomposable, undecided };

struct DecomposeResult {
    DecomposeStatus status = DecomposeStatus::not_decomposable;
    std::optional<DecompositionTree> tree;
};

inline constexpr int kDecomposeMaxOrder = 16;

/// Finds a decomposition tree for (g, parts) or shows none exists.
///
/// A disconnected graph is split into components and a graph whose bipartite
/// complement is disconnected into co-components. Otherwise every split is
/// tried for a skew join (both operand orders); the lowest vertex is pinned to
/// one operand. Graphs above kDecomposeMaxOrder vertices give `undecided`.
/// Throws InputError when `parts` is not a bipartition of g.
DecomposeResult decompose(const Graph& g, const Bipartition& parts);

/// S-expression: `(leaf v x)` / `(leaf v y)` for leaves and
/// `(union (x ...) (y ...) t1 t2)`, `(join ...)`, `(skew ...)` for inner nodes.
std::string serialize_tree(const DecompositionTree& tree);
DecompositionTree parse_tree(std::string_view text);

} // namespace wqo
