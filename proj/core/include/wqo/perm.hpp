#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

/// Bijection on {1..n}, stored in one-line notation.
class Permutation {
public:
    Permutation() = default;
    /// Throws InputError unless `oneline` contains each of 1..n exactly once.
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(oneline_.size()); }
    /// Image of i, 1-based.
    int operator()(int i) const { return oneline_.at(static_cast<std::size_t>(i - 1)); }
    /// Position (1-based) at which `value` sits.
    int position_of(int value) const { return positions_.at(static_cast<std::size_t>(value - 1)); }
    std::span<const int> oneline() const noexcept { return oneline_; }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.oneline_ == b.oneline_; }

private:
    std::vector<int> oneline_;
    std::vector<int> positions_;
};

/// result(i) = outer(inner(i)). Throws InputError on a size mismatch.
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);

/// True iff some subsequence of `host` is order-isomorphic to `pattern`.
bool contains_pattern(const Permutation& host, const Permutation& pattern);

/// For every i the positions holding values >= i are consecutive.
bool is_convex(const Permutation& p);

/// A pair of convex permutations with p = mu o rho^-1.
struct BiconvexWitness {
    Permutation mu;
    Permutation rho;
};

bool verify_biconvex_witness(const Permutation& p, const BiconvexWitness& w);

/// Inversion graph: vertices are the values 1..n, and i < j are adjacent iff
/// i sits to the right of j.
Graph permutation_graph(const Permutation& p);

/// (4,2, 6,1, 8,3, ..., n,n-5, n-1,n-3) for even n >= 6; its permutation
/// graphs and T-graphs form antichains.
Permutation star_perm_t(int n);

/// (2,3,5,1, 7,4, 9,6, ..., n,n-4,n-1,n-2) for even n >= 8, the pairs
/// (2j+3, 2j) running over j = 2..n/2-3.
Permutation star_perm_s(int n);
/// (1,2, odd numbers 3..n-1, n, even numbers n-2 down to 4), even n >= 8.
Permutation rho_star(int n);
/// (2, odd numbers 3..n-3, n, n-1, even numbers n-2 down to 4, 1), even n >= 8.
Permutation mu_star(int n);
BiconvexWitness star_witness_s(int n);

/// Accepts "(4,2,6,1,5,3)" with optional whitespace; "()" is the empty permutation.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

} // namespace wqo
