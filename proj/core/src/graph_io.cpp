#include "wqo/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "wqo/error.hpp"

namespace wqo {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, int line)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

ParsedGraph parse_graph(std::string_view text)
{
    std::optional<GraphBuilder> builder;
    std::optional<std::vector<Vertex>> part_a;
    int b_line = 0;
    int line_no = 0;

    auto vertex = [&](std::string_view tok) {
        int v = to_int(tok, line_no);
        if (v < 1 || v > builder->order())
            throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range");
        return v;
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        const auto kind = toks[0];
        if (kind == "p") {
            if (builder) throw ParseError(line_no, "repeated header");
            if (toks.size() != 2) throw ParseError(line_no, "malformed header, expected 'p <n>'");
            int n = to_int(toks[1], line_no);
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            builder.emplace(n);
        } else if (kind == "b") {
            if (!builder) throw ParseError(line_no, "'b' line before header");
            if (part_a) throw ParseError(line_no, "repeated 'b' line");
            part_a.emplace();
            for (std::size_t i = 1; i < toks.size(); ++i) {
                Vertex v = vertex(toks[i]);
                for (Vertex w : *part_a)
                    if (w == v) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
                part_a->push_back(v);
            }
            b_line = line_no;
        } else if (kind == "e") {
            if (!builder) throw ParseError(line_no, "edge before header");
            if (toks.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            Vertex u = vertex(toks[1]);
            Vertex v = vertex(toks[2]);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if (builder->has_edge(u, v))
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            builder->add_edge(u, v);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    }
    if (!builder) throw ParseError(line_no, "missing 'p <n>' header");

    ParsedGraph out{std::move(*builder).build(), std::nullopt};
    if (part_a) {
        auto parts = Bipartition::from_part_a(out.graph.order(), *part_a);
        if (!parts.valid_for(out.graph)) throw ParseError(b_line, "an edge joins two vertices of the same part");
        out.parts = std::move(parts);
    }
    return out;
}

std::string serialize_graph(const Graph& g, const std::optional<Bipartition>& parts)
{
    std::ostringstream os;
    os << "p " << g.order() << '\n';
    if (parts) {
        os << 'b';
        const auto& a = parts->part_a();
        for (Vertex v = a.first(); v != 0; v = a.next(v)) os << ' ' << v;
        os << '\n';
    }
    for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
    return os.str();
}

ParsedGraph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

} // namespace wqo
