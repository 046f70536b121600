#ifndef AMOEBA_CONSTRUCTIONS_HPP
#define AMOEBA_CONSTRUCTIONS_HPP

#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

struct RootedGraph {
    Graph graph;
    int root = 0;  // 0-based

    RootedGraph(Graph g, int r);
};

// Named families. Vertex layouts are fixed: see each builder.
Graph path(int k);                            // v1-v2-...-vk
Graph cycle(int k);                           // v1-...-vk-v1, k >= 3
Graph tadpole(int k);                         // cycle on v1..vk, pendant v_{k+1} at v1
Graph star(int k);                            // K_{1,k-1}, center v1
Graph complete(int n);
Graph edgeless(int n);
Graph complete_minus_matching(int n, int t);  // K_n minus {v1v2, v3v4, ...}
Graph c5_plus();                              // C_5 plus a chord between diametrical vertices
Graph h_graph(int n);                         // independent A = v1..vq, clique B, staircase joins
Graph g_graph(int n);                         // H_{n-1} plus pendant v_n at v_{n-1}; n odd >= 9
Graph star_forest(int max_degree);            // K_{1,2} + K_{1,3} + ... + K_{1,Delta}

/// Fibonacci tree: T_1 = T_2 = K_2; T_{i+1} joins the roots (maximum-degree
/// vertices) of a T_{i-1} block and a T_i block laid out in that order.
/// Order 2 F_i, maximum degree i-1 for i >= 2.
RootedGraph fibonacci_tree(int index);

Graph add_isolates(const Graph& g, int count);

/// Expansion G *_I H: one copy of H glued by its root at each vertex of I.
/// G keeps its indices; the non-root vertices of the copy at the j-th glue
/// point occupy the contiguous block copy_blocks[j].
struct Expansion {
    Graph graph;
    int base_order = 0;
    std::vector<int> glue_points;               // sorted, 0-based
    std::vector<std::vector<int>> copy_blocks;  // per glue point, non-root images
};

Expansion expand(const Graph& g, std::vector<int> glue_points, const RootedGraph& h);

/// Extension of a permutation of the subgraph index set J' that fixes the
/// shared indices J' intersect J'' pointwise: acts as sigma on the private
/// part of J', identity elsewhere. Throws if sigma moves a shared index or
/// one outside J'.
Permutation lift_subgraph_perm(const Permutation& sigma, const std::vector<int>& j_prime,
                               const std::vector<int>& j_second, int ambient_order);

/// Extension of sigma (on the base graph, stabilizing the glue set) to the
/// expansion: copy blocks follow their glue points positionwise.
Permutation lift_expansion_perm(const Permutation& sigma, const Expansion& expansion);

/// part must be a union of whole components of g (no edge may cross it); a
/// fresh copy of that part is appended, with `e` (given in original indices
/// within part) added to the copy.
Graph union_copy_plus_edge(const Graph& g, const std::vector<int>& part, Edge e);
/// Same, with `e` removed from the copy.
Graph union_copy_minus_edge(const Graph& g, const std::vector<int>& part, Edge e);

/// Disjoint union of an edge-by-edge build-up of g (BFS edge order from
/// vertex 0): one component per prefix, from a single vertex up to a full
/// copy of g. Requires g connected.
Graph embed_as_component(const Graph& g);

}  // namespace amoeba

#endif
