#include "wqo/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "wqo/error.hpp"

namespace wqo {

namespace {

using Row = std::uint64_t;
using Colors = std::vector<int>;

class Labeler {
public:
    Labeler(const Graph& g, std::span<const int> colors) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0)
    {
        for (const auto& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u - 1)] |= Row{1} << (e.v - 1);
            adj_[static_cast<std::size_t>(e.v - 1)] |= Row{1} << (e.u - 1);
        }
        input_.assign(static_cast<std::size_t>(n_), 0);
        if (!colors.empty()) {
            if (static_cast<int>(colors.size()) != n_) throw InputError("one colour per vertex expected");
            std::copy(colors.begin(), colors.end(), input_.begin());
        }
    }

    CanonicalLabeling run()
    {
        CanonicalLabeling out;
        if (n_ == 0) return out;
        std::vector<int> prefix;
        search(rank(input_), prefix);
        out.form = std::move(best_);
        out.order.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) out.order[static_cast<std::size_t>(best_pos_[static_cast<std::size_t>(v)])] = v + 1;
        for (const auto& gen : generators_) {
            std::vector<Vertex> image(static_cast<std::size_t>(n_ + 1), 0);
            for (int v = 0; v < n_; ++v) image[static_cast<std::size_t>(v + 1)] = gen[static_cast<std::size_t>(v)] + 1;
            out.generators.push_back(std::move(image));
        }
        return out;
    }

private:
    /// Dense ranks 0..k-1 preserving the order of the keys.
    template <typename Key>
    Colors rank_by(const std::vector<Key>& keys) const
    {
        std::vector<int> idx(static_cast<std::size_t>(n_));
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
        Colors out(static_cast<std::size_t>(n_));
        int c = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && keys[static_cast<std::size_t>(idx[i - 1])] < keys[static_cast<std::size_t>(idx[i])]) ++c;
            out[static_cast<std::size_t>(idx[i])] = c;
        }
        return out;
    }

    Colors rank(const Colors& keys) const { return rank_by(keys); }

    static int count(const Colors& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

    /// Splits colour classes by neighbour counts per class until stable.
    Colors refine(Colors colors) const
    {
        int k = count(colors);
        while (k < n_) {
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(k + 1), 0));
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s[0] = colors[static_cast<std::size_t>(v)];
                for (Row r = adj_[static_cast<std::size_t>(v)]; r != 0; r &= r - 1)
                    ++s[static_cast<std::size_t>(colors[static_cast<std::size_t>(std::countr_zero(r))] + 1)];
            }
            Colors next = rank_by(sig);
            const int nk = count(next);
            colors = std::move(next);
            if (nk == k) break;
            k = nk;
        }
        return colors;
    }

    void search(Colors colors, std::vector<int>& prefix)
    {
        colors = refine(std::move(colors));
        if (count(colors) == n_) {
            leaf(colors);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(n_), 0);
        for (int c : colors) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2) ++target;

        std::vector<int> explored;
        for (int v = 0; v < n_; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target) continue;
            if (!explored.empty() && equivalent_to_explored(prefix, explored, v)) continue;
            explored.push_back(v);
            Colors child(static_cast<std::size_t>(n_));
            for (int u = 0; u < n_; ++u) {
                int c = colors[static_cast<std::size_t>(u)];
                child[static_cast<std::size_t>(u)] = 2 * c + (c == target && u != v ? 1 : 0);
            }
            prefix.push_back(v);
            search(rank(child), prefix);
            prefix.pop_back();
        }
    }

    /// Orbits of the generators that fix the prefix pointwise.
    bool equivalent_to_explored(const std::vector<int>& prefix, const std::vector<int>& explored, int v) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        bool any = false;
        for (const auto& gen : generators_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gen[static_cast<std::size_t>(p)] == p; }))
                continue;
            any = true;
            for (int u = 0; u < n_; ++u) parent[static_cast<std::size_t>(find(u))] = find(gen[static_cast<std::size_t>(u)]);
        }
        if (!any) return false;
        const int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int w) { return find(w) == root; });
    }

    CanonicalForm form_of(const Colors& pos) const
    {
        CanonicalForm f;
        f.colors.resize(static_cast<std::size_t>(n_));
        f.rows.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) {
            const auto p = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
            f.colors[p] = input_[static_cast<std::size_t>(v)];
            for (Row r = adj_[static_cast<std::size_t>(v)]; r != 0; r &= r - 1)
                f.rows[p] |= Row{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
        }
        return f;
    }

    void leaf(const Colors& pos)
    {
        CanonicalForm f = form_of(pos);
        if (!have_best_) {
            have_best_ = true;
            best_ = f;
            best_pos_ = pos;
            first_ = std::move(f);
            first_pos_ = pos;
            return;
        }
        if (f == first_) record_automorphism(pos, first_pos_);
        else if (f == best_) record_automorphism(pos, best_pos_);
        if (best_ < f) {
            best_ = std::move(f);
            best_pos_ = pos;
        }
    }

    /// Vertex at position p under `pos` maps to the vertex at position p under `other`.
    void record_automorphism(const Colors& pos, const Colors& other)
    {
        std::vector<int> at(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) at[static_cast<std::size_t>(other[static_cast<std::size_t>(v)])] = v;
        std::vector<int> gen(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            gen[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
            identity = identity && gen[static_cast<std::size_t>(v)] == v;
        }
        if (!identity) generators_.push_back(std::move(gen));
    }

    int n_;
    std::vector<Row> adj_;
    Colors input_;
    bool have_best_ = false;
    CanonicalForm best_;
    CanonicalForm first_;
    Colors best_pos_;
    Colors first_pos_;
    std::vector<std::vector<int>> generators_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors)
{
    if (g.order() > kCanonicalMaxOrder)
        throw InputError("canonical labelling supports at most " + std::to_string(kCanonicalMaxOrder) + " vertices");
    return Labeler(g, colors).run();
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) { return canonical_labeling(g, colors).form; }

bool same_orbit(const Graph& g, const CanonicalLabeling& labeling, Vertex u, Vertex v)
{
    if (u == v) return true;
    std::vector<int> parent(static_cast<std::size_t>(g.order() + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& gen : labeling.generators)
        for (Vertex w = 1; w <= g.order(); ++w) {
            int a = find(w);
            int b = find(gen[static_cast<std::size_t>(w)]);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    if (find(u) == find(v)) return true;
    std::vector<int> cu(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> cv(cu);
    cu[static_cast<std::size_t>(u - 1)] = 1;
    cv[static_cast<std::size_t>(v - 1)] = 1;
    return canonical_form(g, cu) == canonical_form(g, cv);
}

} // namespace wqo
