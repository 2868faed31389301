#include "wqo/composition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "wqo/error.hpp"

namespace wqo {

namespace {

BipartiteGraph combine_graphs(const BipartiteGraph& g1, const BipartiteGraph& g2, bool x1_to_y2, bool x2_to_y1)
{
    const int n1 = g1.graph.order();
    const int n = n1 + g2.graph.order();
    if (!g1.parts.valid_for(g1.graph) || !g2.parts.valid_for(g2.graph))
        throw InputError("operand bipartition is not valid");
    GraphBuilder b(n);
    VertexSet xs(n);
    for (const auto& e : g1.graph.edges()) b.add_edge(e.u, e.v);
    for (const auto& e : g2.graph.edges()) b.add_edge(e.u + n1, e.v + n1);
    for (Vertex v = 1; v <= n1; ++v)
        if (g1.parts.in_a(v)) xs.insert(v);
    for (Vertex v = 1; v <= g2.graph.order(); ++v)
        if (g2.parts.in_a(v)) xs.insert(v + n1);
    const VertexSet ys = xs.complement();
    for (Vertex x = xs.first(); x != 0; x = xs.next(x)) {
        for (Vertex y = ys.first(); y != 0; y = ys.next(y)) {
            const bool x_first = x <= n1;
            const bool y_first = y <= n1;
            if ((x_first && !y_first && x1_to_y2) || (!x_first && y_first && x2_to_y1)) b.add_edge(x, y);
        }
    }
    return {std::move(b).build(), Bipartition(xs, ys)};
}

BipartiteGraph complemented(const BipartiteGraph& g) { return {bipartite_complement(g.graph, g.parts), g.parts}; }

std::vector<Vertex> merged(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    std::vector<Vertex> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

using Mask = std::uint32_t;

Mask bit(int v) { return Mask{1} << (v - 1); }

class Decomposer {
public:
    Decomposer(const Graph& g, const Bipartition& parts) : n_(g.order())
    {
        adj_.assign(static_cast<std::size_t>(n_ + 1), 0);
        for (const auto& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
            adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
        }
        for (Vertex v = 1; v <= n_; ++v) (parts.in_a(v) ? xs_ : ys_) |= bit(v);
    }

    // The class built by the three compositions is hereditary: restricting a
    // composition to a vertex subset gives the same composition of the
    // restricted operands. Hence every component, co-component and operand of
    // any valid skew split of a member is itself a member, and the first split
    // found decides membership.
    std::optional<DecompositionTree> build(Mask s) const
    {
        if (std::popcount(s) == 1) {
            Vertex v = std::countr_zero(s) + 1;
            return DecompositionTree::leaf(v, (xs_ & s) != 0);
        }
        if (auto comps = pieces(s, false); comps.size() > 1) return fold(NodeKind::disjoint_union, comps);
        if (auto comps = pieces(s, true); comps.size() > 1) return fold(NodeKind::join, comps);

        const Mask low = s & (~s + 1);
        const Mask rest = s & ~low;
        for (Mask t = rest;; t = (t - 1) & rest) {
            if (t != rest) {
                const Mask first = low | t;
                const Mask second = s & ~first;
                if (skew_split(first, second)) return pair(NodeKind::skew_join, first, second);
                if (skew_split(second, first)) return pair(NodeKind::skew_join, second, first);
            }
            if (t == 0) break;
        }
        return std::nullopt;
    }

private:
    Mask neighbours(Vertex v, Mask s, bool complemented) const
    {
        if (!complemented) return adj_[static_cast<std::size_t>(v)] & s;
        const Mask other = (xs_ & bit(v)) != 0 ? ys_ : xs_;
        return other & s & ~adj_[static_cast<std::size_t>(v)];
    }

    /// Connected components of G[s], or of its bipartite complement.
    std::vector<Mask> pieces(Mask s, bool complemented) const
    {
        std::vector<Mask> out;
        Mask unseen = s;
        while (unseen != 0) {
            Mask comp = unseen & (~unseen + 1);
            Mask frontier = comp;
            while (frontier != 0) {
                Mask next = 0;
                for (Mask f = frontier; f != 0; f &= f - 1) next |= neighbours(std::countr_zero(f) + 1, s, complemented);
                frontier = next & ~comp;
                comp |= next;
            }
            out.push_back(comp);
            unseen &= ~comp;
        }
        return out;
    }

    /// X(first) x Y(second) complete and X(second) x Y(first) empty.
    bool skew_split(Mask first, Mask second) const
    {
        const Mask y1 = first & ys_;
        const Mask y2 = second & ys_;
        for (Mask x = first & xs_; x != 0; x &= x - 1)
            if ((adj_[static_cast<std::size_t>(std::countr_zero(x) + 1)] & y2) != y2) return false;
        for (Mask x = second & xs_; x != 0; x &= x - 1)
            if ((adj_[static_cast<std::size_t>(std::countr_zero(x) + 1)] & y1) != 0) return false;
        return true;
    }

    std::optional<DecompositionTree> pair(NodeKind kind, Mask first, Mask second) const
    {
        auto a = build(first);
        if (!a) return std::nullopt;
        auto b = build(second);
        if (!b) return std::nullopt;
        return DecompositionTree::combine(kind, std::move(*a), std::move(*b));
    }

    std::optional<DecompositionTree> fold(NodeKind kind, const std::vector<Mask>& comps) const
    {
        auto acc = build(comps.front());
        if (!acc) return std::nullopt;
        for (std::size_t i = 1; i < comps.size(); ++i) {
            auto next = build(comps[i]);
            if (!next) return std::nullopt;
            acc = DecompositionTree::combine(kind, std::move(*acc), std::move(*next));
        }
        return acc;
    }

    int n_;
    std::vector<Mask> adj_;
    Mask xs_ = 0;
    Mask ys_ = 0;
};

void collect_edges(const DecompositionTree& t, GraphBuilder& b, VertexSet& seen)
{
    if (t.kind == NodeKind::leaf) {
        if (t.vertex_count() != 1 || !t.children.empty()) throw InputError("leaf must hold exactly one vertex");
        Vertex v = t.xs.empty() ? t.ys.front() : t.xs.front();
        if (v < 1 || v > b.order() || seen.contains(v)) throw InputError("leaf ids must be exactly 1..n");
        seen.insert(v);
        return;
    }
    if (t.children.size() != 2) throw InputError("inner node must have two operands");
    const auto& f = t.children[0];
    const auto& s = t.children[1];
    if (f.vertex_count() == 0 || s.vertex_count() == 0) throw InputError("empty operand");
    if (merged(f.xs, s.xs) != t.xs || merged(f.ys, s.ys) != t.ys)
        throw InputError("node vertex lists do not match its operands");
    collect_edges(f, b, seen);
    collect_edges(s, b, seen);
    auto complete = [&](const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
        for (Vertex x : xs)
            for (Vertex y : ys) b.add_edge(x, y);
    };
    switch (t.kind) {
    case NodeKind::disjoint_union: break;
    case NodeKind::join:
        complete(f.xs, s.ys);
        complete(s.xs, f.ys);
        break;
    case NodeKind::skew_join: complete(f.xs, s.ys); break;
    case NodeKind::leaf: break;
    }
}

const char* kind_name(NodeKind k)
{
    switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::disjoint_union: return "union";
    case NodeKind::join: return "join";
    case NodeKind::skew_join: return "skew";
    }
    return "?";
}

void write_tree(std::ostringstream& os, const DecompositionTree& t, int indent)
{
    os << std::string(static_cast<std::size_t>(indent), ' ');
    if (t.kind == NodeKind::leaf) {
        os << "(leaf " << (t.xs.empty() ? t.ys.front() : t.xs.front()) << (t.xs.empty() ? " y)" : " x)");
        return;
    }
    os << '(' << kind_name(t.kind) << " (x";
    for (Vertex v : t.xs) os << ' ' << v;
    os << ") (y";
    for (Vertex v : t.ys) os << ' ' << v;
    os << ")\n";
    write_tree(os, t.children[0], indent + 2);
    os << '\n';
    write_tree(os, t.children[1], indent + 2);
    os << ')';
}

class TreeReader {
public:
    explicit TreeReader(std::string_view text) : text_(text) {}

    DecompositionTree read()
    {
        auto t = node();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        int line = 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<std::ptrdiff_t>(pos_), '\n'));
        throw ParseError(line, what);
    }
    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    void expect(char c)
    {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string word()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a word");
        return std::string(text_.substr(start, pos_ - start));
    }
    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    Vertex number()
    {
        auto w = word();
        if (!std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("expected a vertex id, got '" + w + "'");
        return std::stoi(w);
    }
    std::vector<Vertex> side(const char* name)
    {
        expect('(');
        if (word() != name) fail(std::string("expected side '") + name + "'");
        std::vector<Vertex> out;
        while (!peek(')')) out.push_back(number());
        expect(')');
        return out;
    }

    DecompositionTree node()
    {
        expect('(');
        const auto kind = word();
        if (kind == "leaf") {
            Vertex v = number();
            auto s = word();
            if (s != "x" && s != "y") fail("leaf side must be x or y");
            expect(')');
            return DecompositionTree::leaf(v, s == "x");
        }
        NodeKind k;
        if (kind == "union")
            k = NodeKind::disjoint_union;
        else if (kind == "join")
            k = NodeKind::join;
        else if (kind == "skew")
            k = NodeKind::skew_join;
        else
            fail("unknown node kind '" + kind + "'");
        DecompositionTree t;
        t.kind = k;
        t.xs = side("x");
        t.ys = side("y");
        t.children.push_back(node());
        t.children.push_back(node());
        expect(')');
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

BipartiteGraph disjoint_union(const BipartiteGraph& g1, const BipartiteGraph& g2)
{
    return combine_graphs(g1, g2, false, false);
}

BipartiteGraph join(const BipartiteGraph& g1, const BipartiteGraph& g2)
{
    return complemented(disjoint_union(complemented(g1), complemented(g2)));
}

BipartiteGraph skew_join(const BipartiteGraph& g1, const BipartiteGraph& g2) { return combine_graphs(g1, g2, true, false); }

DecompositionTree DecompositionTree::leaf(Vertex v, bool in_x)
{
    DecompositionTree t;
    (in_x ? t.xs : t.ys).push_back(v);
    return t;
}

DecompositionTree DecompositionTree::combine(NodeKind kind, DecompositionTree first, DecompositionTree second)
{
    if (kind == NodeKind::leaf) throw InputError("combine needs an inner node kind");
    DecompositionTree t;
    t.kind = kind;
    t.xs = merged(first.xs, second.xs);
    t.ys = merged(first.ys, second.ys);
    t.children.push_back(std::move(first));
    t.children.push_back(std::move(second));
    return t;
}

int DecompositionTree::depth() const noexcept
{
    int d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return children.empty() ? 0 : d + 1;
}

Graph recompose(const DecompositionTree& tree)
{
    const int n = tree.vertex_count();
    GraphBuilder b(n);
    VertexSet seen(n);
    collect_edges(tree, b, seen);
    return std::move(b).build();
}

Bipartition tree_parts(const DecompositionTree& tree)
{
    const int n = tree.vertex_count();
    VertexSet xs(n);
    for (Vertex v : tree.xs) {
        if (v < 1 || v > n) throw InputError("leaf ids must be exactly 1..n");
        xs.insert(v);
    }
    return Bipartition(xs, xs.complement());
}

DecomposeResult decompose(const Graph& g, const Bipartition& parts)
{
    if (!parts.valid_for(g)) throw InputError("bipartition is not valid for the graph");
    DecomposeResult out;
    if (g.order() > kDecomposeMaxOrder) {
        out.status = DecomposeStatus::undecided;
        return out;
    }
    if (g.order() == 0) return out;
    Decomposer d(g, parts);
    const Mask all = g.order() == 32 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    out.tree = d.build(all);
    out.status = out.tree ? DecomposeStatus::decomposed : DecomposeStatus::not_decomposable;
    return out;
}

std::string serialize_tree(const DecompositionTree& tree)
{
    std::ostringstream os;
    write_tree(os, tree, 0);
    os << '\n';
    return os.str();
}

DecompositionTree parse_tree(std::string_view text) { return TreeReader(text).read(); }

} // namespace wqo
