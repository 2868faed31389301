#pragma once

#include <string>
#include <vector>

#include "wqo/graph.hpp"

namespace wqo {

/// How the edges between two letters are read off the order L: with x in the
/// row letter and y in the column letter, `forward` puts an edge on xy iff x
/// precedes y, `backward` iff y precedes x.
enum class DecoderEntry { forward, backward, complete, empty };
enum class PartKind { clique, independent };

char decoder_symbol(DecoderEntry e);

struct LetterRepresentation {
    std::vector<std::vector<Vertex>> parts;
    std::vector<PartKind> kinds;
    std::vector<Vertex> order;                     ///< all vertices, each once
    std::vector<std::vector<DecoderEntry>> decoder; ///< p x p; diagonal unused
};

/// Rows of the grid are the letters. Columns are listed left to right, each
/// from the top row down, so that a lower row's vertex comes after every
/// upper-row neighbour of it.
LetterRepresentation letter_representation_grid(int rows, int cols);

/// Throws InputError when the parts do not partition 1..N, the order is not a
/// permutation, or decoder entries (i,j) and (j,i) disagree.
Graph decode_letter(const LetterRepresentation& rep);

/// Checks every vertex pair of g against the rule of its letter pair and every
/// letter against its kind. False when the vertex counts differ.
bool verify_letter(const LetterRepresentation& rep, const Graph& g);

/// `letters p`, one `part <kind> <ids>` line per letter (kind I or K),
/// `order <ids>`, then p decoder rows of F/B/C/E symbols (`-` on the diagonal).
std::string serialize_letter(const LetterRepresentation& rep);

} // namespace wqo
