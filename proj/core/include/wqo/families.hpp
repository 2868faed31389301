#pragma once

#include <string>
#include <vector>

#include "wqo/graph.hpp"
#include "wqo/perm.hpp"

namespace wqo {

enum class Zone { A, B, C, D };

char zone_letter(Zone z);

struct ZoneIndex {
    Zone zone;
    int index; ///< 1-based position inside the zone

    friend bool operator==(const ZoneIndex&, const ZoneIndex&) = default;
};

/// A zoned construction: vertices are numbered zone by zone (A, B, C, D),
/// index-ascending inside each zone, and labelled like "a3".
struct ZonedLayout {
    Graph graph;
    Bipartition parts;
    int zone_size = 0;
    std::vector<ZoneIndex> zones; ///< zones[v-1] for vertex v

    Vertex vertex(Zone z, int i) const { return static_cast<int>(z) * zone_size + i; }
    /// All vertices of one zone, index-ascending.
    std::vector<Vertex> zone_vertices(Zone z) const;
    BipartiteGraph bipartite() const { return {graph, parts}; }
};

/// Four-zone graph built from a permutation: A-B a perfect matching
/// a_i b_{p(i)}, C-D complete, a_i adjacent to d_1..d_i, b_i adjacent to
/// c_1..c_i. Parts are A+C and B+D.
struct TGraphLayout : ZonedLayout {};

/// Three-zone graph of a biconvex permutation: b_i is adjacent to
/// a_1..a_rho(i) and c_1..c_mu(i). Parts are A+C and B.
struct SGraphLayout : ZonedLayout {
    BiconvexWitness witness;
};

TGraphLayout t_graph(const Permutation& p);
/// Throws InputError when the witness does not verify for p.
SGraphLayout s_graph(const Permutation& p, const BiconvexWitness& w);

/// H_{k,m}: rows V_1..V_k of m vertices each; v_{i,j} is adjacent to
/// v_{i+1,1..j}. Vertex v_{i,j} has id (i-1)*m + j (rows bottom-up, row-major);
/// parts are the odd rows and the even rows.
BipartiteGraph universal_grid(int rows, int cols);
inline Vertex grid_vertex(int cols, int row, int col) { return (row - 1) * cols + col; }

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// Parts 1..a and a+1..a+b.
BipartiteGraph complete_bipartite(int a, int b);
/// Two disjoint P3: 1-2-3 and 4-5-6.
Graph two_p3();
/// C4 on 1..4 with pendant 4+i attached to cycle vertex i.
Graph sun4();
/// C4 on 1..4 with one pendant 5 on vertex 1.
Graph sun1();
/// Subdivided claw with legs of length 1, 2, 3 around centre 1:
/// 1-2, 1-3-4, 1-5-6-7.
Graph s123();
/// Spine 1..i+1 (edges labelled 1..i), two pendants on each end:
/// i+2 and i+3 on vertex 1, i+4 and i+5 on vertex i+1.
Graph h_antichain(int i);
/// Bipartite complement of path(k) with respect to odd/even ids.
Graph p_tilde(int k);
Bipartition odd_even_parts(int n);

} // namespace wqo
