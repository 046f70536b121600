#ifndef AMOEBA_EXPRESSION_HPP
#define AMOEBA_EXPRESSION_HPP

#include <string>
#include <vector>

#include "amoeba/graph.hpp"

namespace amoeba {

/// Parses the construction expression grammar, e.g.
///   union(path(4), plus_edge(copy(path(4)), 1, 4))
///   expand(path(5), {2, 3}, rooted(plus_edge(star(4), 3, 4), 3))
/// Vertex arguments are 1-based. Throws ParseError on malformed input.
/// Advisory notes (parameter combinations outside the usual ranges) are
/// appended to `warnings` when given.
Graph parse_construction(const std::string& text,
                         std::vector<std::string>* warnings = nullptr);

/// EBNF of the grammar accepted by parse_construction (documented for the CLI).
std::string construction_grammar();

}  // namespace amoeba

#endif
