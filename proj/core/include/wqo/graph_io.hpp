#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wqo/graph.hpp"

namespace wqo {

struct ParsedGraph {
    Graph graph;
    std::optional<Bipartition> parts;
};

/// Reads the line-oriented graph format:
///
///     # comment
///     p <n>
///     b <id> <id> ...      (optional, lists part A)
///     e <u> <v>            (one per edge)
///
/// Blank lines are ignored and `e` accepts either endpoint order. Throws
/// ParseError with the line number on a malformed or repeated header, an
/// out-of-range id, a self-loop, a duplicate edge, or a `b` line that is not a
/// bipartition of the final graph.
ParsedGraph parse_graph(std::string_view text);

/// Header, then the `b` line when parts are given, then edges sorted by (u,v).
/// Labels are not part of the format and are dropped.
std::string serialize_graph(const Graph& g, const std::optional<Bipartition>& parts = std::nullopt);

ParsedGraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace wqo
