#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wqo/composition.hpp"
#include "wqo/matcher.hpp"
#include "wqo/perm.hpp"

namespace wqo {

enum class Verdict { pass, fail, undecided };

const char* verdict_word(Verdict v); ///< "ok", "FAIL", "UNDECIDED"

/// Serialized certificate attached to a failing case. `text` is in one of the
/// library's text formats, with `#` comment lines describing what to re-check.
struct Witness {
    std::string text;
};

struct CaseResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;
    std::optional<Witness> witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0;

    int count(Verdict v) const;
    /// fail beats undecided beats pass.
    Verdict overall() const;
};

struct SuiteConfig {
    unsigned workers = 1;
    std::uint64_t step_budget = kDefaultStepBudget;
    int lemma_key_nmax = 11;       ///< 9..12
    int lemma_reduction_nmax = 10; ///< 1..12
    int closure_nmax = 10;         ///< 1..12
    int universality_mmax = 6;     ///< 1..6
    int letter_max = 8;
    int calibration_nmax = 6;      ///< brute force over all edge sets, 1..6
    std::vector<int> t_pair{6, 8};
    std::vector<int> s_pair{8, 10};
    int random_trees = 300;
    int random_tree_depth = 6;
    std::uint64_t seed = 1;

    SearchOptions search() const { return {step_budget, workers}; }
};

/// Suite ids accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws InputError on an unknown id or an out-of-range config value.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);
/// Runs every suite of suite_names().
std::vector<SuiteReport> run_all_suites(const SuiteConfig& config);

/// Pairwise incomparability of family members, both directions. Families:
/// T, S, H (induced subgraphs) and permT, permS (pattern containment).
/// Throws InputError on an unknown family or an invalid index.
SuiteReport antichain_check(std::string_view family, const std::vector<int>& indices, const SuiteConfig& config);

// Individual suites; each aggregates its cases deterministically.
SuiteReport suite_identities(const SuiteConfig& config);
SuiteReport suite_fidelity(const SuiteConfig& config);
SuiteReport suite_t_free(const SuiteConfig& config);
SuiteReport suite_t_antichain(const SuiteConfig& config);
SuiteReport suite_s_structure(const SuiteConfig& config);
SuiteReport suite_s_antichain(const SuiteConfig& config);
SuiteReport suite_perm_antichain(const SuiteConfig& config);
SuiteReport suite_h_antichain(const SuiteConfig& config);
SuiteReport suite_lemma_key(const SuiteConfig& config);
SuiteReport suite_lemma_reduction(const SuiteConfig& config);
SuiteReport suite_universality(const SuiteConfig& config);
SuiteReport suite_closure(const SuiteConfig& config);
SuiteReport suite_letter(const SuiteConfig& config);
SuiteReport suite_enum_calibration(const SuiteConfig& config);

/// Random tree over single vertices: each node below `max_depth` is a leaf
/// with probability 3/10, otherwise one of the three compositions. Leaf ids
/// follow depth-first order, matching the id shift of the composition
/// functions.
DecompositionTree random_tree(std::mt19937_64& rng, int max_depth);
/// Builds the tree's graph with disjoint_union / join / skew_join.
BipartiteGraph compose_tree(const DecompositionTree& tree);

/// Realizing permutation for universal_grid(rows, cols): relabelling vertex v
/// to position of its segment gives permutation_graph of the result.
struct GridPermutation {
    Permutation perm;
    std::vector<Vertex> image; ///< image[v-1] = vertex of permutation_graph(perm)
};
GridPermutation grid_permutation(int rows, int cols);

/// Independent canonical key for tiny graphs: the minimum adjacency mask over
/// all n! relabellings. n <= 8.
std::uint64_t brute_canonical_mask(const Graph& g);
/// Counts of bipartite graphs on n vertices up to isomorphism by trying all
/// edge subsets: {all, connected}. n <= 7.
std::pair<std::size_t, std::size_t> brute_bipartite_counts(int n);

/// Simple paths on k vertices, each listed once (first endpoint below last).
std::vector<std::vector<Vertex>> simple_paths(const Graph& g, int k);

} // namespace wqo
