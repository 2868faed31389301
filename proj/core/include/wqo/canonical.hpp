#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

inline constexpr int kCanonicalMaxOrder = 64;

/// Isomorphism-invariant encoding: two vertex-coloured graphs are isomorphic
/// (respecting colours) iff their forms are equal.
struct CanonicalForm {
    std::vector<int> colors;          ///< by canonical position
    std::vector<std::uint64_t> rows;  ///< bit q of row p: positions p and q adjacent

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// order[p] is the vertex placed at canonical position p (0-based).
    std::vector<Vertex> order;
    /// Automorphisms met during the search, each as an image vector by vertex
    /// (index 0 unused). They generate a subgroup of the automorphism group.
    std::vector<std::vector<Vertex>> generators;
};

/// Colour refinement plus individualisation search with automorphism pruning.
/// `colors` is empty or holds one colour per vertex (index v-1). Throws
/// InputError above kCanonicalMaxOrder vertices.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// Exact: whether some automorphism of g maps u to v.
bool same_orbit(const Graph& g, const CanonicalLabeling& labeling, Vertex u, Vertex v);

} // namespace wqo
