#include "wqo/graph.hpp"

#include <deque>

#include "wqo/error.hpp"

namespace wqo {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n))
{
    if (n < 0) throw InputError("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    GraphBuilder b(n);
    for (const auto& e : edges) {
        if (b.has_edge(e.u, e.v))
            throw InputError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        b.add_edge(e.u, e.v);
    }
    Graph g = std::move(b).build();
    if (!labels.empty()) g = g.with_labels(std::move(labels));
    return g;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 1; u <= n_; ++u) {
        const auto& row = rows_[index(u)];
        for (Vertex v = row.next(u); v != 0; v = row.next(v)) out.push_back({u, v});
    }
    return out;
}

std::string Graph::label(Vertex v) const
{
    return labels_.empty() ? std::to_string(v) : labels_[index(v)];
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
        throw InputError("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

void GraphBuilder::check(Vertex v) const
{
    if (!graph_.has_vertex(v))
        throw InputError("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(graph_.n_));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!graph_.rows_[graph_.index(u)].contains(v)) {
        graph_.rows_[graph_.index(u)].insert(v);
        graph_.rows_[graph_.index(v)].insert(u);
        ++graph_.m_;
    }
    return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    check(u);
    check(v);
    return graph_.rows_[graph_.index(u)].contains(v);
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label)
{
    check(v);
    if (graph_.labels_.empty()) {
        graph_.labels_.reserve(static_cast<std::size_t>(graph_.n_));
        for (Vertex w = 1; w <= graph_.n_; ++w) graph_.labels_.push_back(std::to_string(w));
    }
    graph_.labels_[graph_.index(v)] = std::move(label);
    return *this;
}

Graph GraphBuilder::build() && { return std::move(graph_); }

Bipartition::Bipartition(VertexSet part_a, VertexSet part_b) : a_(std::move(part_a)), b_(std::move(part_b))
{
    if (a_.capacity() != b_.capacity()) throw InputError("bipartition parts have different capacities");
    if (a_.intersects(b_)) throw InputError("bipartition parts overlap");
    if ((a_ | b_).size() != a_.capacity()) throw InputError("bipartition does not cover every vertex");
}

Bipartition Bipartition::from_part_a(int n, std::span<const Vertex> part_a)
{
    VertexSet a(n);
    for (Vertex v : part_a) {
        if (v < 1 || v > n) throw InputError("bipartition vertex " + std::to_string(v) + " out of range");
        a.insert(v);
    }
    return Bipartition(a, a.complement());
}

bool Bipartition::valid_for(const Graph& g) const
{
    if (g.order() != order()) return false;
    for (Vertex v = 1; v <= g.order(); ++v) {
        const auto& same = a_.contains(v) ? a_ : b_;
        if (g.neighborhood(v).intersects(same)) return false;
    }
    return true;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    const int k = static_cast<int>(vertices.size());
    for (Vertex v : vertices)
        if (!g.has_vertex(v)) throw InputError("vertex id " + std::to_string(v) + " out of range");
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (vertices[i] == vertices[j]) throw InputError("repeated vertex in induced subgraph");
            if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i + 1, j + 1);
        }
        if (g.has_labels()) b.set_label(i + 1, g.label(vertices[i]));
    }
    return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& vertices)
{
    if (vertices.capacity() > g.order()) throw InputError("vertex set exceeds graph order");
    const auto list = vertices.to_vector();
    return induced_subgraph(g, std::span<const Vertex>(list));
}

Graph bipartite_complement(const Graph& g, const Bipartition& parts)
{
    if (!parts.valid_for(g)) throw InputError("bipartition is not valid for the graph");
    GraphBuilder b(g.order());
    const auto& a = parts.part_a();
    const auto& bb = parts.part_b();
    for (Vertex x = a.first(); x != 0; x = a.next(x)) {
        const auto missing = bb - g.neighborhood(x);
        for (Vertex y = missing.first(); y != 0; y = missing.next(y)) b.add_edge(x, y);
    }
    Graph out = std::move(b).build();
    return g.has_labels() ? out.with_labels(g.labels()) : out;
}

std::optional<Bipartition> find_bipartition(const Graph& g)
{
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n + 1), -1);
    VertexSet a(n);
    std::deque<Vertex> queue;
    for (Vertex s = 1; s <= n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            if (colour[u] == 0) a.insert(u);
            const auto& nb = g.neighborhood(u);
            for (Vertex w = nb.first(); w != 0; w = nb.next(w)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Bipartition(a, a.complement());
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g)
{
    const int n = g.order();
    VertexSet unseen = VertexSet::all(n);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = unseen.first(); s != 0; s = unseen.first()) {
        VertexSet comp(n);
        VertexSet frontier(n);
        frontier.insert(s);
        while (!frontier.empty()) {
            comp |= frontier;
            unseen -= frontier;
            VertexSet next(n);
            for (Vertex v = frontier.first(); v != 0; v = frontier.next(v)) next |= g.neighborhood(v);
            frontier = next & unseen;
        }
        out.push_back(comp.to_vector());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph relabel(const Graph& g, std::span<const Vertex> image)
{
    const int n = g.order();
    if (static_cast<int>(image.size()) != n) throw InputError("relabeling size mismatch");
    VertexSet seen(n);
    for (Vertex v : image) {
        if (v < 1 || v > n || seen.contains(v)) throw InputError("relabeling is not a bijection");
        seen.insert(v);
    }
    GraphBuilder b(n);
    for (const auto& e : g.edges()) b.add_edge(image[e.u - 1], image[e.v - 1]);
    if (g.has_labels())
        for (Vertex v = 1; v <= n; ++v) b.set_label(image[v - 1], g.label(v));
    return std::move(b).build();
}

} // namespace wqo
