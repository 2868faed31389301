#include "wqo/families.hpp"

#include "wqo/error.hpp"

namespace wqo {

char zone_letter(Zone z)
{
    switch (z) {
    case Zone::A: return 'a';
    case Zone::B: return 'b';
    case Zone::C: return 'c';
    case Zone::D: return 'd';
    }
    return '?';
}

std::vector<Vertex> ZonedLayout::zone_vertices(Zone z) const
{
    std::vector<Vertex> out;
    for (int i = 1; i <= zone_size; ++i) out.push_back(vertex(z, i));
    return out;
}

namespace {

template <typename Layout>
Layout zoned_layout(int n, int zone_count)
{
    Layout layout;
    layout.zone_size = n;
    for (int z = 0; z < zone_count; ++z)
        for (int i = 1; i <= n; ++i) layout.zones.push_back({static_cast<Zone>(z), i});
    return layout;
}

void label_zones(GraphBuilder& b, const ZonedLayout& layout)
{
    for (std::size_t k = 0; k < layout.zones.size(); ++k)
        b.set_label(static_cast<Vertex>(k + 1),
                    std::string(1, zone_letter(layout.zones[k].zone)) + std::to_string(layout.zones[k].index));
}

Bipartition zone_parts(const ZonedLayout& layout, std::initializer_list<Zone> side_a)
{
    const int total = static_cast<int>(layout.zones.size());
    VertexSet a(total);
    for (Zone z : side_a)
        for (Vertex v : layout.zone_vertices(z)) a.insert(v);
    return Bipartition(a, a.complement());
}

} // namespace

TGraphLayout t_graph(const Permutation& p)
{
    const int n = p.size();
    auto layout = zoned_layout<TGraphLayout>(n, 4);
    GraphBuilder b(4 * n);
    for (int i = 1; i <= n; ++i) {
        b.add_edge(layout.vertex(Zone::A, i), layout.vertex(Zone::B, p(i)));
        for (int j = 1; j <= n; ++j) b.add_edge(layout.vertex(Zone::C, i), layout.vertex(Zone::D, j));
        for (int j = 1; j <= i; ++j) {
            b.add_edge(layout.vertex(Zone::A, i), layout.vertex(Zone::D, j));
            b.add_edge(layout.vertex(Zone::B, i), layout.vertex(Zone::C, j));
        }
    }
    label_zones(b, layout);
    layout.graph = std::move(b).build();
    layout.parts = zone_parts(layout, {Zone::A, Zone::C});
    return layout;
}

SGraphLayout s_graph(const Permutation& p, const BiconvexWitness& w)
{
    if (!verify_biconvex_witness(p, w)) throw InputError("biconvex witness does not verify");
    const int n = p.size();
    auto layout = zoned_layout<SGraphLayout>(n, 3);
    layout.witness = w;
    GraphBuilder b(3 * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= w.rho(i); ++j) b.add_edge(layout.vertex(Zone::B, i), layout.vertex(Zone::A, j));
        for (int j = 1; j <= w.mu(i); ++j) b.add_edge(layout.vertex(Zone::B, i), layout.vertex(Zone::C, j));
    }
    label_zones(b, layout);
    layout.graph = std::move(b).build();
    layout.parts = zone_parts(layout, {Zone::A, Zone::C});
    return layout;
}

BipartiteGraph universal_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
    GraphBuilder b(rows * cols);
    VertexSet odd(rows * cols);
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            Vertex v = grid_vertex(cols, i, j);
            b.set_label(v, "v" + std::to_string(i) + "," + std::to_string(j));
            if (i % 2 == 1) odd.insert(v);
            if (i < rows)
                for (int l = 1; l <= j; ++l) b.add_edge(v, grid_vertex(cols, i + 1, l));
        }
    }
    return {std::move(b).build(), Bipartition(odd, odd.complement())};
}

Graph path(int n)
{
    if (n < 1) throw InputError("path needs at least one vertex");
    GraphBuilder b(n);
    for (int i = 1; i < n; ++i) b.add_edge(i, i + 1);
    return std::move(b).build();
}

Graph cycle(int n)
{
    if (n < 3) throw InputError("cycle needs at least three vertices");
    GraphBuilder b(n);
    for (int i = 1; i <= n; ++i) b.add_edge(i, i % n + 1);
    return std::move(b).build();
}

Graph complete(int n)
{
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    GraphBuilder b(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) b.add_edge(i, j);
    return std::move(b).build();
}

BipartiteGraph complete_bipartite(int a, int b)
{
    if (a < 0 || b < 0 || a + b < 1) throw InputError("complete bipartite graph needs a vertex");
    GraphBuilder gb(a + b);
    VertexSet left(a + b);
    for (int x = 1; x <= a; ++x) {
        left.insert(x);
        for (int y = a + 1; y <= a + b; ++y) gb.add_edge(x, y);
    }
    return {std::move(gb).build(), Bipartition(left, left.complement())};
}

Graph two_p3()
{
    const Edge e[] = {{1, 2}, {2, 3}, {4, 5}, {5, 6}};
    return Graph::from_edges(6, e);
}

Graph sun4()
{
    const Edge e[] = {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}};
    return Graph::from_edges(8, e);
}

Graph sun1()
{
    const Edge e[] = {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}};
    return Graph::from_edges(5, e);
}

Graph s123()
{
    const Edge e[] = {{1, 2}, {1, 3}, {3, 4}, {1, 5}, {5, 6}, {6, 7}};
    return Graph::from_edges(7, e);
}

Graph h_antichain(int i)
{
    if (i < 1) throw InputError("H_i needs i >= 1");
    GraphBuilder b(i + 5);
    for (int v = 1; v <= i; ++v) b.add_edge(v, v + 1);
    b.add_edge(1, i + 2);
    b.add_edge(1, i + 3);
    b.add_edge(i + 1, i + 4);
    b.add_edge(i + 1, i + 5);
    return std::move(b).build();
}

Bipartition odd_even_parts(int n)
{
    VertexSet odd(n);
    for (int v = 1; v <= n; v += 2) odd.insert(v);
    return Bipartition(odd, odd.complement());
}

Graph p_tilde(int k) { return bipartite_complement(path(k), odd_even_parts(k)); }

} // namespace wqo
