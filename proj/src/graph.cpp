#include "amoeba/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace amoeba {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    words_ = static_cast<size_t>((n + 63) / 64);
    adj_.assign(static_cast<size_t>(n) * words_, 0);
    degrees_.assign(n, 0);
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v >> 6)] |= 1ull << (v & 63);
    adj_[static_cast<size_t>(v) * words_ + static_cast<size_t>(u >> 6)] |= 1ull << (u & 63);
    ++degrees_[u];
    ++degrees_[v];
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    Graph g(n);
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) throw std::invalid_argument("duplicate edge");
    }
    for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
    g.edges_ = std::move(edges);
    return g;
}

Graph Graph::from_edge_list_1based(int n, const std::vector<Edge>& pairs) {
    std::vector<Edge> shifted;
    shifted.reserve(pairs.size());
    for (auto [u, v] : pairs) shifted.emplace_back(u - 1, v - 1);
    return from_edges(n, std::move(shifted));
}

int Graph::min_degree() const {
    return *std::min_element(degrees_.begin(), degrees_.end());
}

int Graph::max_degree() const {
    return *std::max_element(degrees_.begin(), degrees_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degrees_[v]);
    for (int u = 0; u < n_; ++u) {
        if (u != v && adjacent(v, u)) out.push_back(u);
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq = degrees_;
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

std::vector<int> Graph::degree_values() const {
    std::vector<int> values = degrees_;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Graph Graph::with_edge_added(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u == v || u < 0 || v >= n_) throw std::invalid_argument("invalid edge");
    if (adjacent(u, v)) throw std::invalid_argument("edge already present");
    std::vector<Edge> edges = edges_;
    edges.emplace_back(u, v);
    return from_edges(n_, std::move(edges));
}

Graph Graph::with_edge_removed(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (!(u >= 0 && v < n_ && u != v) || !adjacent(u, v)) {
        throw std::invalid_argument("edge not present");
    }
    std::vector<Edge> edges = edges_;
    edges.erase(std::find(edges.begin(), edges.end(), Edge{u, v}));
    return from_edges(n_, std::move(edges));
}

bool Graph::is_connected() const {
    return components().size() == 1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n_; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u) {
                if (comp[u] == -1 && adjacent(v, u)) {
                    comp[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < n_; ++v) out[comp[v]].push_back(v);
    return out;
}

Graph apply_permutation(const Graph& g, const Permutation& sigma) {
    if (sigma.degree() != g.order()) {
        throw std::invalid_argument("permutation degree does not match graph order");
    }
    Permutation inv = sigma.inverse();
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) edges.emplace_back(inv(u), inv(v));
    return Graph::from_edges(g.order(), std::move(edges));
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(g.order(), std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edges(g.order() + h.order(), std::move(edges));
}

int welsh_powell_bound(const Graph& g) {
    std::vector<int> seq = g.degree_sequence();
    int best = 0;
    for (int i = 0; i < g.order(); ++i) {
        best = std::max(best, std::min(seq[i] + 1, i + 1));
    }
    return best;
}

}  // namespace amoeba
