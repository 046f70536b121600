#ifndef AMOEBA_IO_HPP
#define AMOEBA_IO_HPP

#include <string>

#include "amoeba/graph.hpp"

namespace amoeba {

/// graph6 encoding for graphs on up to 62 vertices: header byte n+63,
/// then the upper triangle in column-major order, packed 6 bits per
/// printable byte at offset 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

/// Plain edge list: first line "n m", then m lines "i j" (1-based).
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

}  // namespace amoeba

#endif
