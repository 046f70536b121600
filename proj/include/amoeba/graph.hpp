#ifndef AMOEBA_GRAPH_HPP
#define AMOEBA_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "amoeba/permutation.hpp"

namespace amoeba {

using Edge = std::pair<int, int>;  // endpoints 0-based, first < second

/// Simple undirected graph on vertices {0, ..., n-1}, immutable after
/// construction. Edges are kept sorted and mirrored into per-vertex bitsets
/// for O(1) adjacency tests; vertex counts stay small (tens, not thousands),
/// so everything else iterates over the edge list or the vertex range.
class Graph {
public:
    explicit Graph(int n);
    /// Build from 0-based endpoint pairs (any order within a pair).
    /// Rejects loops, duplicate edges, and out-of-range endpoints.
    static Graph from_edges(int n, std::vector<Edge> edges);
    /// Same, with 1-based endpoints as used by all text formats.
    static Graph from_edge_list_1based(int n, const std::vector<Edge>& pairs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const {
        return (adj_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] >>
                (v & 63)) & 1u;
    }
    int degree(int v) const { return degrees_[v]; }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> neighbors(int v) const;

    /// Degrees in non-increasing order.
    std::vector<int> degree_sequence() const;
    /// Sorted set of distinct degree values.
    std::vector<int> degree_values() const;

    Graph with_edge_added(int u, int v) const;
    Graph with_edge_removed(int u, int v) const;

    bool is_connected() const;
    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    size_t words_ = 1;
    std::vector<Edge> edges_;
    std::vector<uint64_t> adj_;
    std::vector<int> degrees_;
};

/// The copy of `g` determined by `sigma`: edge {i, j} maps to
/// {sigma^-1(i), sigma^-1(j)}. Successive copies compose as
/// apply_permutation(apply_permutation(g, sigma), rho) ==
/// apply_permutation(g, compose(sigma, rho)).
Graph apply_permutation(const Graph& g, const Permutation& sigma);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Welsh-Powell chromatic bound: max over i of min{d_i + 1, i} on the
/// non-increasing degree sequence (i counted from 1).
int welsh_powell_bound(const Graph& g);

}  // namespace amoeba

#endif
