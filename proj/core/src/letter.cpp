#include "wqo/letter.hpp"

#include <sstream>

#include "wqo/error.hpp"
#include "wqo/families.hpp"

namespace wqo {

char decoder_symbol(DecoderEntry e)
{
    switch (e) {
    case DecoderEntry::forward: return 'F';
    case DecoderEntry::backward: return 'B';
    case DecoderEntry::complete: return 'C';
    case DecoderEntry::empty: return 'E';
    }
    return '?';
}

namespace {

DecoderEntry mirrored(DecoderEntry e)
{
    if (e == DecoderEntry::forward) return DecoderEntry::backward;
    if (e == DecoderEntry::backward) return DecoderEntry::forward;
    return e;
}

struct Index {
    std::vector<int> letter; ///< by vertex
    std::vector<int> rank;   ///< position in L, by vertex
};

Index validate(const LetterRepresentation& rep)
{
    const auto p = rep.parts.size();
    if (rep.kinds.size() != p || rep.decoder.size() != p) throw InputError("letter tables must have one row per part");
    for (const auto& row : rep.decoder)
        if (row.size() != p) throw InputError("decoder must be square");
    const int n = static_cast<int>(rep.order.size());
    Index idx{std::vector<int>(static_cast<std::size_t>(n + 1), -1), std::vector<int>(static_cast<std::size_t>(n + 1), -1)};
    int covered = 0;
    for (std::size_t i = 0; i < p; ++i) {
        for (Vertex v : rep.parts[i]) {
            if (v < 1 || v > n || idx.letter[static_cast<std::size_t>(v)] >= 0)
                throw InputError("letter parts must partition the vertices");
            idx.letter[static_cast<std::size_t>(v)] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != n) throw InputError("letter parts must partition the vertices");
    for (int r = 0; r < n; ++r) {
        Vertex v = rep.order[static_cast<std::size_t>(r)];
        if (v < 1 || v > n || idx.rank[static_cast<std::size_t>(v)] >= 0)
            throw InputError("order must list every vertex once");
        idx.rank[static_cast<std::size_t>(v)] = r;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            if (rep.decoder[j][i] != mirrored(rep.decoder[i][j]))
                throw InputError("decoder entries for letters " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                 " disagree");
    return idx;
}

bool prescribed(const LetterRepresentation& rep, const Index& idx, Vertex x, Vertex y)
{
    const auto i = static_cast<std::size_t>(idx.letter[static_cast<std::size_t>(x)]);
    const auto j = static_cast<std::size_t>(idx.letter[static_cast<std::size_t>(y)]);
    if (i == j) return rep.kinds[i] == PartKind::clique;
    const bool x_first = idx.rank[static_cast<std::size_t>(x)] < idx.rank[static_cast<std::size_t>(y)];
    switch (rep.decoder[i][j]) {
    case DecoderEntry::forward: return x_first;
    case DecoderEntry::backward: return !x_first;
    case DecoderEntry::complete: return true;
    case DecoderEntry::empty: return false;
    }
    return false;
}

} // namespace

LetterRepresentation letter_representation_grid(int rows, int cols)
{
    if (rows < 1 || cols < 1) throw InputError("grid dimensions must be positive");
    LetterRepresentation rep;
    const auto p = static_cast<std::size_t>(rows);
    rep.parts.resize(p);
    rep.kinds.assign(p, PartKind::independent);
    rep.decoder.assign(p, std::vector<DecoderEntry>(p, DecoderEntry::empty));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) rep.parts[static_cast<std::size_t>(i - 1)].push_back(grid_vertex(cols, i, j));
    for (int j = 1; j <= cols; ++j)
        for (int i = rows; i >= 1; --i) rep.order.push_back(grid_vertex(cols, i, j));
    for (std::size_t i = 0; i + 1 < p; ++i) {
        rep.decoder[i + 1][i] = DecoderEntry::forward;
        rep.decoder[i][i + 1] = DecoderEntry::backward;
    }
    return rep;
}

Graph decode_letter(const LetterRepresentation& rep)
{
    const auto idx = validate(rep);
    const int n = static_cast<int>(rep.order.size());
    GraphBuilder b(n);
    for (Vertex x = 1; x <= n; ++x)
        for (Vertex y = x + 1; y <= n; ++y)
            if (prescribed(rep, idx, x, y)) b.add_edge(x, y);
    return std::move(b).build();
}

bool verify_letter(const LetterRepresentation& rep, const Graph& g)
{
    const auto idx = validate(rep);
    if (static_cast<int>(rep.order.size()) != g.order()) return false;
    for (Vertex x = 1; x <= g.order(); ++x)
        for (Vertex y = 1; y <= g.order(); ++y)
            if (x != y && g.adjacent(x, y) != prescribed(rep, idx, x, y)) return false;
    return true;
}

std::string serialize_letter(const LetterRepresentation& rep)
{
    std::ostringstream os;
    os << "letters " << rep.parts.size() << '\n';
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
        os << "part " << (rep.kinds[i] == PartKind::clique ? 'K' : 'I');
        for (Vertex v : rep.parts[i]) os << ' ' << v;
        os << '\n';
    }
    os << "order";
    for (Vertex v : rep.order) os << ' ' << v;
    os << '\n';
    for (std::size_t i = 0; i < rep.decoder.size(); ++i) {
        for (std::size_t j = 0; j < rep.decoder[i].size(); ++j)
            os << (j ? " " : "") << (i == j ? '-' : decoder_symbol(rep.decoder[i][j]));
        os << '\n';
    }
    return os.str();
}

} // namespace wqo
