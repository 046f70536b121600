#include "amoeba/constructions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace amoeba {

RootedGraph::RootedGraph(Graph g, int r) : graph(std::move(g)), root(r) {
    if (root < 0 || root >= graph.order()) throw std::invalid_argument("root out of range");
}

Graph path(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(k, std::move(edges));
}

Graph cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, k - 1);
    return Graph::from_edges(k, std::move(edges));
}

Graph tadpole(int k) {
    if (k < 3) throw std::invalid_argument("tadpole cycle needs at least 3 vertices");
    std::vector<Edge> edges = cycle(k).edges();
    edges.emplace_back(0, k);
    return Graph::from_edges(k + 1, std::move(edges));
}

Graph star(int k) {
    if (k < 1) throw std::invalid_argument("star needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(k, std::move(edges));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph edgeless(int n) {
    return Graph(n);
}

Graph complete_minus_matching(int n, int t) {
    if (t < 1 || 2 * t > n) {
        throw std::invalid_argument("matching size must satisfy 1 <= 2t <= n");
    }
    Graph g = complete(n);
    for (int i = 0; i < t; ++i) g = g.with_edge_removed(2 * i, 2 * i + 1);
    return g;
}

Graph c5_plus() {
    return Graph::from_edge_list_1based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 4}});
}

Graph h_graph(int n) {
    if (n < 2) throw std::invalid_argument("h_graph needs order at least 2");
    const int q = n / 2;
    std::vector<Edge> edges;
    // B = {v_{q+1}, ..., v_n} is a clique
    for (int u = q; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    // v_i joined to v_{q+j} exactly when j <= i
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= i && q + j <= n; ++j) edges.emplace_back(i - 1, q + j - 1);
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph g_graph(int n) {
    if (n % 2 == 0 || n < 9) {
        throw std::invalid_argument("g_graph needs odd order at least 9");
    }
    Graph base = h_graph(n - 1);
    std::vector<Edge> edges = base.edges();
    edges.emplace_back(n - 2, n - 1);  // pendant at v_{2q}
    return Graph::from_edges(n, std::move(edges));
}

Graph star_forest(int max_degree) {
    if (max_degree < 2) throw std::invalid_argument("star forest needs maximum degree >= 2");
    Graph g = star(3);  // K_{1,2}
    for (int d = 3; d <= max_degree; ++d) g = disjoint_union(g, star(d + 1));
    return g;
}

namespace {

int lexicographically_first_max_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v) {
        if (g.degree(v) > g.degree(best)) best = v;
    }
    return best;
}

}  // namespace

RootedGraph fibonacci_tree(int index) {
    if (index < 1) throw std::invalid_argument("fibonacci tree index must be positive");
    if (index <= 2) return RootedGraph(path(2), 0);
    RootedGraph prev = fibonacci_tree(index - 2);   // becomes the first block
    RootedGraph last = fibonacci_tree(index - 1);   // becomes the second block
    Graph joined = disjoint_union(prev.graph, last.graph)
                       .with_edge_added(prev.root, prev.graph.order() + last.root);
    int root = lexicographically_first_max_degree_vertex(joined);
    return RootedGraph(std::move(joined), root);
}

Graph add_isolates(const Graph& g, int count) {
    if (count < 0) throw std::invalid_argument("isolate count must be non-negative");
    if (count == 0) return g;
    return disjoint_union(g, Graph(count));
}

Expansion expand(const Graph& g, std::vector<int> glue_points, const RootedGraph& h) {
    std::sort(glue_points.begin(), glue_points.end());
    glue_points.erase(std::unique(glue_points.begin(), glue_points.end()), glue_points.end());
    for (int p : glue_points) {
        if (p < 0 || p >= g.order()) throw std::invalid_argument("glue point out of range");
    }
    Expansion result{g, g.order(), glue_points, {}};
    if (glue_points.empty()) return result;

    // non-root vertices of H in increasing index order
    std::vector<int> h_vertices;
    for (int v = 0; v < h.graph.order(); ++v) {
        if (v != h.root) h_vertices.push_back(v);
    }
    std::vector<Edge> edges = g.edges();
    int next = g.order();
    for (int glue : glue_points) {
        std::vector<int> block;
        std::vector<int> image(h.graph.order(), -1);
        image[h.root] = glue;
        for (int v : h_vertices) {
            image[v] = next++;
            block.push_back(image[v]);
        }
        for (auto [u, v] : h.graph.edges()) edges.emplace_back(image[u], image[v]);
        result.copy_blocks.push_back(std::move(block));
    }
    result.graph = Graph::from_edges(next, std::move(edges));
    return result;
}

Permutation lift_subgraph_perm(const Permutation& sigma, const std::vector<int>& j_prime,
                               const std::vector<int>& j_second, int ambient_order) {
    std::vector<bool> in_prime(ambient_order, false);
    std::vector<bool> shared(ambient_order, false);
    for (int x : j_prime) {
        if (x < 0 || x >= ambient_order) throw std::invalid_argument("index out of range");
        in_prime[x] = true;
    }
    for (int x : j_second) {
        if (x < 0 || x >= ambient_order) throw std::invalid_argument("index out of range");
        if (in_prime[x]) shared[x] = true;
    }
    std::vector<int> images(ambient_order);
    for (int i = 0; i < ambient_order; ++i) images[i] = i;
    for (int i = 0; i < sigma.degree(); ++i) {
        if (sigma(i) == i) continue;
        if (i >= ambient_order || !in_prime[i] || shared[i]) {
            throw std::invalid_argument("permutation moves an index outside its private part");
        }
        images[i] = sigma(i);
    }
    return Permutation(std::move(images));
}

Permutation lift_expansion_perm(const Permutation& sigma, const Expansion& expansion) {
    if (sigma.degree() != expansion.base_order) {
        throw std::invalid_argument("permutation degree does not match the base graph");
    }
    const auto& glue = expansion.glue_points;
    std::vector<int> slot_of(expansion.base_order, -1);
    for (size_t j = 0; j < glue.size(); ++j) slot_of[glue[j]] = static_cast<int>(j);
    for (int p : glue) {
        if (slot_of[sigma(p)] == -1) {
            throw std::invalid_argument("permutation does not stabilize the glue set");
        }
    }
    std::vector<int> images(expansion.graph.order());
    for (int i = 0; i < expansion.base_order; ++i) images[i] = sigma(i);
    for (size_t j = 0; j < glue.size(); ++j) {
        int target_slot = slot_of[sigma(glue[j])];
        const auto& from = expansion.copy_blocks[j];
        const auto& to = expansion.copy_blocks[target_slot];
        for (size_t k = 0; k < from.size(); ++k) images[from[k]] = to[k];
    }
    return Permutation(std::move(images));
}

namespace {

Graph append_part_copy(const Graph& g, const std::vector<int>& part, Edge e, bool add) {
    std::vector<int> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> position(g.order(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.order()) {
            throw std::invalid_argument("part vertex out of range");
        }
        position[sorted[i]] = static_cast<int>(i);
    }
    for (auto [u, v] : g.edges()) {
        if ((position[u] == -1) != (position[v] == -1)) {
            throw std::invalid_argument("part splits a component of the graph");
        }
    }
    if (e.first > e.second) std::swap(e.first, e.second);
    if (position[e.first] == -1 || position[e.second] == -1 || e.first == e.second) {
        throw std::invalid_argument("edge endpoints must lie in the copied part");
    }
    if (add && g.adjacent(e.first, e.second)) {
        throw std::invalid_argument("edge to add is already present in the part");
    }
    if (!add && !g.adjacent(e.first, e.second)) {
        throw std::invalid_argument("edge to remove is missing from the part");
    }
    std::vector<Edge> edges = g.edges();
    const int offset = g.order();
    for (auto [u, v] : g.edges()) {
        if (position[u] != -1 && position[v] != -1 &&
            !(!add && Edge{u, v} == e)) {
            edges.emplace_back(offset + position[u], offset + position[v]);
        }
    }
    if (add) edges.emplace_back(offset + position[e.first], offset + position[e.second]);
    return Graph::from_edges(offset + static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace

Graph union_copy_plus_edge(const Graph& g, const std::vector<int>& part, Edge e) {
    return append_part_copy(g, part, e, true);
}

Graph union_copy_minus_edge(const Graph& g, const std::vector<int>& part, Edge e) {
    return append_part_copy(g, part, e, false);
}

Graph embed_as_component(const Graph& g) {
    if (!g.is_connected()) {
        throw std::invalid_argument("embed_as_component needs a connected graph");
    }
    // BFS edge order from vertex 0: each edge attaches to the part built so far.
    std::vector<Edge> order;
    std::vector<bool> visited(g.order(), false);
    std::deque<int> queue{0};
    visited[0] = true;
    std::vector<int> bfs{0};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v)) {
            if (!visited[u]) {
                visited[u] = true;
                queue.push_back(u);
                bfs.push_back(u);
            }
        }
    }
    std::vector<int> rank(g.order());
    for (size_t i = 0; i < bfs.size(); ++i) rank[bfs[i]] = static_cast<int>(i);
    for (int v : bfs) {
        for (int u : g.neighbors(v)) {
            if (rank[u] < rank[v]) continue;  // handled from the earlier endpoint
            order.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    // Stage i uses the first i edges (renamed to 0..k-1 in discovery order);
    // the result is the disjoint union of all stages.
    Graph result(1);  // stage 0: a single vertex
    std::vector<Edge> stage_edges;
    std::vector<int> name(g.order(), -1);
    int used = 0;
    auto vertex_name = [&](int v) {
        if (name[v] == -1) name[v] = used++;
        return name[v];
    };
    vertex_name(bfs[0]);
    for (const Edge& e : order) {
        stage_edges.emplace_back(vertex_name(e.first), vertex_name(e.second));
        result = disjoint_union(result, Graph::from_edges(used, stage_edges));
    }
    return result;
}

}  // namespace amoeba
