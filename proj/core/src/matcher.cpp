#include "wqo/matcher.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <functional>
#include <mutex>
#include <thread>

#include "wqo/error.hpp"

namespace wqo {

namespace {

// Common-neighbour layers are only materialised for hosts up to this order.
constexpr int kCommonLayerMaxHost = 2048;
constexpr int kCommonLayerMaxDepth = 16;

/// Pattern/host data shared read-only by every searcher. Host bitsets use bit
/// x-1 for host vertex x.
struct Problem {
    int p = 0;
    int h = 0;
    int words = 0;
    std::vector<std::uint8_t> pattern_adj;
    std::vector<int> pattern_common;
    std::vector<int> pattern_degree;
    std::vector<std::uint64_t> host_adj;
    std::vector<std::uint64_t> host_non;
    int common_layers = 0;
    std::vector<std::uint64_t> host_common;
    std::vector<std::uint64_t> root_domains;

    const std::uint64_t* adj_row(int x) const { return host_adj.data() + static_cast<std::size_t>(x) * words; }
    const std::uint64_t* non_row(int x) const { return host_non.data() + static_cast<std::size_t>(x) * words; }
    const std::uint64_t* common_row(int t, int x) const
    {
        return host_common.data() + (static_cast<std::size_t>(t - 1) * h + x) * words;
    }
    bool p_adj(int u, int w) const { return pattern_adj[static_cast<std::size_t>(u) * p + w] != 0; }
    int p_common(int u, int w) const { return pattern_common[static_cast<std::size_t>(u) * p + w]; }
};

void set_bit(std::uint64_t* row, int x) { row[x >> 6] |= std::uint64_t{1} << (x & 63); }

int popcount_row(const std::uint64_t* row, int words)
{
    int c = 0;
    for (int i = 0; i < words; ++i) c += std::popcount(row[i]);
    return c;
}

struct VertexProfile {
    int degree = 0;
    int non_degree = 0;
    int distance_two = 0;
    std::vector<int> neighbour_degrees; // descending
};

std::vector<VertexProfile> profiles(const Graph& g)
{
    const int n = g.order();
    std::vector<VertexProfile> out(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        auto& pr = out[static_cast<std::size_t>(v - 1)];
        const auto& nb = g.neighborhood(v);
        pr.degree = nb.size();
        pr.non_degree = n - 1 - pr.degree;
        VertexSet second(n);
        for (Vertex w = nb.first(); w != 0; w = nb.next(w)) {
            pr.neighbour_degrees.push_back(g.degree(w));
            second |= g.neighborhood(w);
        }
        second -= nb;
        second.erase(v);
        pr.distance_two = second.size();
        std::sort(pr.neighbour_degrees.begin(), pr.neighbour_degrees.end(), std::greater<>());
    }
    return out;
}

bool dominated(const VertexProfile& pat, const VertexProfile& host)
{
    if (pat.degree > host.degree || pat.non_degree > host.non_degree || pat.distance_two > host.distance_two)
        return false;
    for (std::size_t i = 0; i < pat.neighbour_degrees.size(); ++i)
        if (pat.neighbour_degrees[i] > host.neighbour_degrees[i]) return false;
    return true;
}

Problem prepare(const Graph& pattern, const Graph& host)
{
    Problem pr;
    pr.p = pattern.order();
    pr.h = host.order();
    pr.words = std::max(1, (pr.h + 63) / 64);
    const auto P = static_cast<std::size_t>(pr.p);
    const auto H = static_cast<std::size_t>(pr.h);
    const auto W = static_cast<std::size_t>(pr.words);

    pr.pattern_adj.assign(P * P, 0);
    pr.pattern_common.assign(P * P, 0);
    pr.pattern_degree.resize(P);
    int max_common = 0;
    for (int u = 0; u < pr.p; ++u) {
        pr.pattern_degree[static_cast<std::size_t>(u)] = pattern.degree(u + 1);
        for (int w = 0; w < pr.p; ++w) {
            if (u == w) continue;
            pr.pattern_adj[static_cast<std::size_t>(u) * P + static_cast<std::size_t>(w)] = pattern.adjacent(u + 1, w + 1);
            int c = VertexSet::intersection_size(pattern.neighborhood(u + 1), pattern.neighborhood(w + 1));
            pr.pattern_common[static_cast<std::size_t>(u) * P + static_cast<std::size_t>(w)] = c;
            max_common = std::max(max_common, c);
        }
    }

    pr.host_adj.assign(H * W, 0);
    pr.host_non.assign(H * W, 0);
    for (int x = 0; x < pr.h; ++x) {
        for (int y = 0; y < pr.h; ++y) {
            if (x == y) continue;
            if (host.adjacent(x + 1, y + 1))
                set_bit(pr.host_adj.data() + static_cast<std::size_t>(x) * W, y);
            else
                set_bit(pr.host_non.data() + static_cast<std::size_t>(x) * W, y);
        }
    }

    if (pr.h <= kCommonLayerMaxHost && max_common > 0) {
        pr.common_layers = std::min(max_common, kCommonLayerMaxDepth);
        pr.host_common.assign(static_cast<std::size_t>(pr.common_layers) * H * W, 0);
        for (int x = 0; x < pr.h; ++x) {
            for (int y = x + 1; y < pr.h; ++y) {
                int c = VertexSet::intersection_size(host.neighborhood(x + 1), host.neighborhood(y + 1));
                for (int t = 1; t <= std::min(c, pr.common_layers); ++t) {
                    set_bit(pr.host_common.data() + (static_cast<std::size_t>(t - 1) * H + static_cast<std::size_t>(x)) * W, y);
                    set_bit(pr.host_common.data() + (static_cast<std::size_t>(t - 1) * H + static_cast<std::size_t>(y)) * W, x);
                }
            }
        }
    }

    const auto pp = profiles(pattern);
    const auto hp = profiles(host);
    pr.root_domains.assign(P * W, 0);
    for (int u = 0; u < pr.p; ++u)
        for (int x = 0; x < pr.h; ++x)
            if (dominated(pp[static_cast<std::size_t>(u)], hp[static_cast<std::size_t>(x)]))
                set_bit(pr.root_domains.data() + static_cast<std::size_t>(u) * W, x);
    return pr;
}

enum class Outcome { found, exhausted, aborted };

/// One depth-first search over a Problem. Domains for every level live in a
/// single flat buffer: level L, pattern vertex u starts at (L*p + u)*words.
class Searcher {
public:
    using Visitor = std::function<bool(const std::vector<int>&)>;

    Searcher(const Problem& pr, std::uint64_t cap) : pr_(pr), cap_(cap)
    {
        const auto P = static_cast<std::size_t>(pr.p);
        dom_.assign((P + 1) * P * static_cast<std::size_t>(pr.words), 0);
        std::copy(pr.root_domains.begin(), pr.root_domains.end(), dom_.begin());
        assigned_.assign(P, -1);
    }

    void set_cancel(const std::atomic<int>* decided, int job)
    {
        decided_ = decided;
        job_ = job;
    }
    void set_visitor(Visitor v) { visitor_ = std::move(v); }

    std::uint64_t steps() const noexcept { return steps_; }
    const std::vector<int>& assignment() const noexcept { return assigned_; }

    int choose_variable(int level) const
    {
        int best = -1;
        int best_size = INT_MAX;
        for (int u = 0; u < pr_.p; ++u) {
            if (assigned_[static_cast<std::size_t>(u)] != -1) continue;
            int s = popcount_row(domain(level, u), pr_.words);
            if (s < best_size ||
                (s == best_size && pr_.pattern_degree[static_cast<std::size_t>(u)] >
                                       pr_.pattern_degree[static_cast<std::size_t>(best)])) {
                best = u;
                best_size = s;
            }
        }
        return best;
    }

    std::vector<int> candidates(int level, int u) const
    {
        std::vector<int> out;
        const std::uint64_t* d = domain(level, u);
        for (int i = 0; i < pr_.words; ++i)
            for (std::uint64_t w = d[i]; w != 0; w &= w - 1) out.push_back(i * 64 + std::countr_zero(w));
        return out;
    }

    /// Assigns u -> x at the root and searches below it.
    Outcome run_subtree(int u, int x)
    {
        if (++steps_ > cap_) return Outcome::aborted;
        assigned_[static_cast<std::size_t>(u)] = x;
        if (!propagate(0, u, x)) {
            assigned_[static_cast<std::size_t>(u)] = -1;
            return Outcome::exhausted;
        }
        Outcome r = search(1, pr_.p - 1);
        if (r != Outcome::found) assigned_[static_cast<std::size_t>(u)] = -1;
        return r;
    }

    Outcome run_all() { return search(0, pr_.p); }

private:
    std::uint64_t* domain(int level, int u)
    {
        return dom_.data() + (static_cast<std::size_t>(level) * static_cast<std::size_t>(pr_.p) + static_cast<std::size_t>(u)) *
                                 static_cast<std::size_t>(pr_.words);
    }
    const std::uint64_t* domain(int level, int u) const
    {
        return dom_.data() + (static_cast<std::size_t>(level) * static_cast<std::size_t>(pr_.p) + static_cast<std::size_t>(u)) *
                                 static_cast<std::size_t>(pr_.words);
    }

    bool cancelled() const { return decided_ != nullptr && decided_->load(std::memory_order_relaxed) < job_; }

    bool propagate(int level, int u, int x)
    {
        const int W = pr_.words;
        union_.assign(static_cast<std::size_t>(W), 0);
        int open = 0;
        for (int w = 0; w < pr_.p; ++w) {
            if (assigned_[static_cast<std::size_t>(w)] != -1) continue;
            ++open;
            const std::uint64_t* src = domain(level, w);
            std::uint64_t* dst = domain(level + 1, w);
            const std::uint64_t* rel = pr_.p_adj(u, w) ? pr_.adj_row(x) : pr_.non_row(x);
            int c = std::min(pr_.p_common(u, w), pr_.common_layers);
            std::uint64_t any = 0;
            if (c > 0) {
                const std::uint64_t* com = pr_.common_row(c, x);
                for (int i = 0; i < W; ++i) any |= (dst[i] = src[i] & rel[i] & com[i]);
            } else {
                for (int i = 0; i < W; ++i) any |= (dst[i] = src[i] & rel[i]);
            }
            if (any == 0) return false;
            for (int i = 0; i < W; ++i) union_[static_cast<std::size_t>(i)] |= dst[i];
        }
        return popcount_row(union_.data(), W) >= open;
    }

    Outcome search(int level, int open)
    {
        if (open == 0) {
            if (!visitor_ || visitor_(assigned_)) return Outcome::found;
            return Outcome::exhausted;
        }
        const int u = choose_variable(level);
        for (int x : candidates(level, u)) {
            if (++steps_ > cap_) return Outcome::aborted;
            if ((steps_ & 1023U) == 0 && cancelled()) return Outcome::aborted;
            assigned_[static_cast<std::size_t>(u)] = x;
            if (propagate(level, u, x)) {
                Outcome r = search(level + 1, open - 1);
                if (r != Outcome::exhausted) return r;
            }
            assigned_[static_cast<std::size_t>(u)] = -1;
        }
        return Outcome::exhausted;
    }

    const Problem& pr_;
    std::uint64_t cap_;
    std::uint64_t steps_ = 0;
    std::vector<std::uint64_t> dom_;
    std::vector<int> assigned_;
    std::vector<std::uint64_t> union_;
    const std::atomic<int>* decided_ = nullptr;
    int job_ = 0;
    Visitor visitor_;
};

Embedding to_embedding(const std::vector<int>& assignment)
{
    std::vector<Vertex> image;
    image.reserve(assignment.size());
    for (int x : assignment) image.push_back(x + 1);
    return Embedding(std::move(image));
}

bool any_root_domain_empty(const Problem& pr)
{
    for (int u = 0; u < pr.p; ++u)
        if (popcount_row(pr.root_domains.data() + static_cast<std::size_t>(u) * pr.words, pr.words) == 0) return true;
    return false;
}

struct SubtreeResult {
    Outcome outcome = Outcome::exhausted;
    std::uint64_t steps = 0;
    std::vector<int> assignment;
    bool done = false;
};

} // namespace

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e)
{
    if (e.size() != pattern.order()) return false;
    VertexSet used(host.order());
    for (Vertex v : e.image()) {
        if (!host.has_vertex(v) || used.contains(v)) return false;
        used.insert(v);
    }
    for (Vertex u = 1; u <= pattern.order(); ++u)
        for (Vertex w = u + 1; w <= pattern.order(); ++w)
            if (pattern.adjacent(u, w) != host.adjacent(e(u), e(w))) return false;
    return true;
}

EmbeddingResult find_induced_embedding(const Graph& pattern, const Graph& host, const SearchOptions& options)
{
    EmbeddingResult result;
    if (pattern.order() == 0) {
        result.status = SearchStatus::found;
        result.embedding = Embedding{};
        return result;
    }
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return result;

    const Problem pr = prepare(pattern, host);
    if (any_root_domain_empty(pr)) return result;

    Searcher probe(pr, 0);
    const int root = probe.choose_variable(0);
    const std::vector<int> roots = probe.candidates(0, root);
    const std::uint64_t budget = options.step_budget;

    // Subtree i is judged after 0..i-1: a prefix that overruns the budget is
    // undecided, otherwise the first subtree with a witness wins. This matches
    // a single sequential search with one global step counter.
    std::vector<SubtreeResult> results(roots.size());
    std::atomic<int> decided{INT_MAX};
    std::mutex reduce_mutex;
    std::size_t frontier = 0;
    std::uint64_t used = 0;

    auto reduce = [&]() {
        while (frontier < results.size() && results[frontier].done && decided.load() == INT_MAX) {
            const auto& r = results[frontier];
            if (r.outcome == Outcome::aborted || used + r.steps > budget) {
                result.status = SearchStatus::undecided;
                result.steps = std::min(used + r.steps, budget + 1);
                decided.store(static_cast<int>(frontier));
                return;
            }
            used += r.steps;
            if (r.outcome == Outcome::found) {
                result.status = SearchStatus::found;
                result.embedding = to_embedding(r.assignment);
                result.steps = used;
                decided.store(static_cast<int>(frontier));
                return;
            }
            ++frontier;
        }
    };

    auto run_job = [&](std::size_t i, std::uint64_t cap) {
        Searcher s(pr, cap);
        s.set_cancel(&decided, static_cast<int>(i));
        SubtreeResult r;
        r.outcome = s.run_subtree(root, roots[i]);
        r.steps = s.steps();
        if (r.outcome == Outcome::found) r.assignment = s.assignment();
        r.done = true;
        std::lock_guard lock(reduce_mutex);
        results[i] = std::move(r);
        reduce();
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(roots.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < roots.size() && decided.load() == INT_MAX; ++i) run_job(i, budget - used);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&]() {
                for (std::size_t i = next++; i < roots.size(); i = next++) {
                    if (decided.load() < static_cast<int>(i)) break;
                    run_job(i, budget);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    if (decided.load() == INT_MAX) {
        result.status = SearchStatus::none;
        result.steps = used;
    }
    return result;
}

CountResult count_induced_embeddings(const Graph& pattern, const Graph& host, std::uint64_t limit,
                                     const SearchOptions& options)
{
    if (limit < 1) throw InputError("limit must be at least 1");
    CountResult out;
    if (pattern.order() == 0) {
        out.count = 1;
        return out;
    }
    if (pattern.order() > host.order()) return out;
    const Problem pr = prepare(pattern, host);
    if (any_root_domain_empty(pr)) return out;
    Searcher s(pr, options.step_budget);
    s.set_visitor([&](const std::vector<int>&) { return ++out.count >= limit; });
    out.budget_exhausted = s.run_all() == Outcome::aborted;
    return out;
}

FreenessResult is_free(const Graph& g, std::span<const Graph> forbidden, const SearchOptions& options)
{
    FreenessResult out;
    std::optional<std::size_t> undecided;
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        auto r = find_induced_embedding(forbidden[i], g, options);
        if (r.status == SearchStatus::found) {
            out.verdict = Freeness::contains;
            out.forbidden_index = i;
            out.witness = std::move(r.embedding);
            return out;
        }
        if (r.status == SearchStatus::undecided && !undecided) undecided = i;
    }
    if (undecided) {
        out.verdict = Freeness::undecided;
        out.forbidden_index = *undecided;
    }
    return out;
}

FreenessResult is_free(const Graph& g, std::initializer_list<Graph> forbidden, const SearchOptions& options)
{
    return is_free(g, std::span<const Graph>(forbidden.begin(), forbidden.size()), options);
}

bool are_isomorphic(const Graph& g, const Graph& h, const SearchOptions& options)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (Vertex v = 1; v <= g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    auto r = find_induced_embedding(g, h, options);
    if (r.status == SearchStatus::undecided) throw SearchBudgetExceeded("isomorphism test exceeded its step budget");
    return r.found();
}

namespace detail {

namespace {

bool extend_path(const Graph& g, Vertex end, int length, int k, VertexSet& visited)
{
    if (length == k) return true;
    // Vertices still reachable from `end` without revisiting the path.
    VertexSet open = visited.complement();
    VertexSet reach(g.order());
    VertexSet frontier = g.neighborhood(end) & open;
    while (!frontier.empty()) {
        reach |= frontier;
        VertexSet next(g.order());
        for (Vertex v = frontier.first(); v != 0; v = frontier.next(v)) next |= g.neighborhood(v);
        frontier = (next & open) - reach;
    }
    if (length + reach.size() < k) return false;

    const VertexSet step = g.neighborhood(end) & open;
    for (Vertex w = step.first(); w != 0; w = step.next(w)) {
        visited.insert(w);
        if (extend_path(g, w, length + 1, k, visited)) return true;
        visited.erase(w);
    }
    return false;
}

} // namespace

bool has_path_subgraph_dfs(const Graph& g, int k)
{
    if (k < 1) throw InputError("path length must be at least 1");
    if (k > g.order()) return false;
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) < k) continue;
        for (Vertex s : comp) {
            VertexSet visited(g.order());
            visited.insert(s);
            if (extend_path(g, s, 1, k, visited)) return true;
        }
    }
    return false;
}

std::optional<bool> has_path_subgraph_dp(const Graph& g, int k)
{
    constexpr std::size_t kStateCap = std::size_t{1} << 22;
    if (k < 1) throw InputError("path length must be at least 1");
    const int n = g.order();
    if (n > 64) return std::nullopt;
    if (k > n) return false;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (const auto& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u - 1)] |= std::uint64_t{1} << (e.v - 1);
        adj[static_cast<std::size_t>(e.v - 1)] |= std::uint64_t{1} << (e.u - 1);
    }
    // State: vertex set of a simple path plus its current end.
    using State = std::pair<std::uint64_t, int>;
    std::vector<State> layer;
    for (int v = 0; v < n; ++v) layer.emplace_back(std::uint64_t{1} << v, v);
    for (int len = 1; len < k; ++len) {
        std::vector<State> next;
        for (const auto& [mask, end] : layer) {
            for (std::uint64_t cand = adj[static_cast<std::size_t>(end)] & ~mask; cand != 0; cand &= cand - 1) {
                int w = std::countr_zero(cand);
                next.emplace_back(mask | (std::uint64_t{1} << w), w);
            }
            if (next.size() > 2 * kStateCap) return std::nullopt;
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) return false;
        if (next.size() > kStateCap) return std::nullopt;
        layer = std::move(next);
    }
    return !layer.empty();
}

} // namespace detail

bool has_path_subgraph(const Graph& g, int k)
{
    if (k < 1) throw InputError("path length must be at least 1");
    if (g.order() > 16) {
        if (auto r = detail::has_path_subgraph_dp(g, k)) return *r;
    }
    return detail::has_path_subgraph_dfs(g, k);
}

} // namespace wqo
