#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqo/vertex_set.hpp"

namespace wqo {

struct Edge {
    Vertex u;
    Vertex v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on the vertex ids 1..n.
///
/// Each vertex carries a neighborhood bitset, so adjacency tests are O(1) and
/// neighborhood intersections cost O(n/64). Labels are provenance metadata
/// only: they never take part in equality or isomorphism.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws InputError on self-loops, out-of-range ids, duplicate edges or a
    /// label vector whose size is neither 0 nor n.
    static Graph from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[index(u)].contains(v); }
    const VertexSet& neighborhood(Vertex v) const { return rows_[index(v)]; }
    int degree(Vertex v) const { return rows_[index(v)].size(); }
    bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= n_; }

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    /// Label of v, or the decimal id when the graph is unlabeled.
    std::string label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    /// Same order and same edge set under the identity map.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    friend class GraphBuilder;

    std::size_t index(Vertex v) const { return static_cast<std::size_t>(v - 1); }

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

/// Mutable staging area for a Graph. Re-adding an existing edge is a no-op.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    GraphBuilder& set_label(Vertex v, std::string label);
    int order() const noexcept { return graph_.n_; }

    Graph build() &&;

private:
    void check(Vertex v) const;
    Graph graph_;
};

/// Two disjoint vertex sets covering 1..n. `part_a` is the side the text
/// format lists on its `b` line; the operations of the structure module call
/// it X and `part_b` Y.
class Bipartition {
public:
    Bipartition() = default;
    /// Throws InputError when the sets overlap, leave a vertex uncovered or
    /// have mismatched capacities.
    Bipartition(VertexSet part_a, VertexSet part_b);
    static Bipartition from_part_a(int n, std::span<const Vertex> part_a);

    const VertexSet& part_a() const noexcept { return a_; }
    const VertexSet& part_b() const noexcept { return b_; }
    int order() const noexcept { return a_.capacity(); }
    bool in_a(Vertex v) const { return a_.contains(v); }

    /// True when no edge of g joins two vertices of the same part.
    bool valid_for(const Graph& g) const;
    Bipartition swapped() const { return Bipartition(b_, a_); }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    VertexSet a_;
    VertexSet b_;
};

struct BipartiteGraph {
    Graph graph;
    Bipartition parts;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Subgraph induced by `vertices`, relabeled 1..|vertices| in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph induced_subgraph(const Graph& g, const VertexSet& vertices);

/// Swaps edges and non-edges between the two parts; the parts themselves are
/// kept. Throws InputError when `parts` is not a bipartition of g.
Graph bipartite_complement(const Graph& g, const Bipartition& parts);

/// BFS 2-colouring, component by component; the lowest id of every component
/// goes to part A. Returns nullopt iff g has an odd cycle.
std::optional<Bipartition> find_bipartition(const Graph& g);

/// Vertex sets of the components, each sorted, ordered by minimum element.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Applies a vertex relabeling: vertex v of g becomes `image[v-1]` in the result.
Graph relabel(const Graph& g, std::span<const Vertex> image);

} // namespace wqo
