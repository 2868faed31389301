#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

inline constexpr int kEnumerateMaxOrder = 12;

/// All bipartite graphs on n+1 vertices up to isomorphism, given one
/// representative per class on n vertices. Children add vertex n+1 with every
/// neighbourhood that keeps the graph bipartite and are kept only when the new
/// vertex is the canonical last one; siblings are deduplicated by canonical form.
std::vector<Graph> extend_bipartite(const std::vector<Graph>& parents);

/// levels[k-1] holds one representative per class of bipartite graphs on k
/// vertices, for k = 1..n_max. Throws InputError outside 1..kEnumerateMaxOrder.
std::vector<std::vector<Graph>> bipartite_levels(int n_max);

/// Lazy stream of bipartite graphs on n vertices, one per isomorphism class.
/// The level below is materialised up front; children are produced parent by
/// parent. Output order is deterministic.
class EnumerationStream {
public:
    /// Throws InputError outside 1..kEnumerateMaxOrder.
    EnumerationStream(int n, bool connected_only);

    std::optional<Graph> next();
    int order() const noexcept { return n_; }
    bool connected_only() const noexcept { return connected_only_; }

private:
    int n_;
    bool connected_only_;
    std::vector<Graph> parents_;
    std::size_t parent_ = 0;
    std::vector<Graph> buffer_;
    std::size_t pos_ = 0;
};

std::vector<Graph> enumerate_bipartite(int n, bool connected_only);

} // namespace wqo
