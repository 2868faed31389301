#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000'000;

enum class SearchStatus {
    found,     ///< a witness was produced
    none,      ///< the search space was exhausted
    undecided, ///< the step budget ran out first
};

struct SearchOptions {
    /// Upper bound on candidate assignments tried; exceeding it yields `undecided`.
    std::uint64_t step_budget = kDefaultStepBudget;
    /// Root-level candidates are shared among this many threads. The outcome,
    /// witness and step count do not depend on this value.
    unsigned workers = 1;
};

/// Injective map from pattern vertices to host vertices.
class Embedding {
public:
    Embedding() = default;
    explicit Embedding(std::vector<Vertex> image) : image_(std::move(image)) {}

    int size() const noexcept { return static_cast<int>(image_.size()); }
    Vertex operator()(Vertex pattern_vertex) const { return image_.at(static_cast<std::size_t>(pattern_vertex - 1)); }
    std::span<const Vertex> image() const noexcept { return image_; }

    friend bool operator==(const Embedding&, const Embedding&) = default;

private:
    std::vector<Vertex> image_;
};

/// Independent certificate check: injective, in range, and every pattern pair
/// is an edge exactly when its image pair is a host edge.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

struct EmbeddingResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Embedding> embedding;
    std::uint64_t steps = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

/// Exact induced-subgraph search.
///
/// Backtracking over pattern vertices with forward checking on bitset domains.
/// Initial domains are filtered by degree, non-degree, neighbour-degree
/// dominance and distance-2 counts; each assignment narrows the remaining
/// domains by adjacency, non-adjacency and common-neighbour counts. The next
/// variable is the one with the smallest domain, ties broken by larger
/// pattern degree and then smaller id, so results are reproducible.
EmbeddingResult find_induced_embedding(const Graph& pattern, const Graph& host, const SearchOptions& options = {});

struct CountResult {
    std::uint64_t count = 0;
    bool budget_exhausted = false;
};

/// Number of distinct induced embeddings, stopping once `limit` is reached.
CountResult count_induced_embeddings(const Graph& pattern, const Graph& host, std::uint64_t limit,
                                     const SearchOptions& options = {});

enum class Freeness { free, contains, undecided };

struct FreenessResult {
    Freeness verdict = Freeness::free;
    /// Index into the forbidden list of the first pattern found (or left undecided).
    std::size_t forbidden_index = 0;
    std::optional<Embedding> witness;

    bool is_free() const noexcept { return verdict == Freeness::free; }
};

/// Tests the forbidden graphs in order and reports the first one present.
/// A pattern whose search runs out of budget makes the result undecided
/// unless a later pattern is found.
FreenessResult is_free(const Graph& g, std::span<const Graph> forbidden, const SearchOptions& options = {});
FreenessResult is_free(const Graph& g, std::initializer_list<Graph> forbidden, const SearchOptions& options = {});

class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Equal order and size plus an induced embedding in one direction. Throws
/// SearchBudgetExceeded rather than guessing when the budget runs out.
bool are_isomorphic(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// True iff g has a simple path on k vertices, not necessarily induced.
/// Depth-first search over simple paths with reachability pruning; graphs with
/// 17 to 64 vertices go through a layered subset dynamic programme first.
bool has_path_subgraph(const Graph& g, int k);

namespace detail {
bool has_path_subgraph_dfs(const Graph& g, int k);
/// nullopt when the state space exceeds its cap.
std::optional<bool> has_path_subgraph_dp(const Graph& g, int k);
} // namespace detail

} // namespace wqo
