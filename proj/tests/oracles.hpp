// Test-only brute-force oracles, independent of the library's search and
// group machinery: exhaustive permutation enumeration and closure by
// repeated composition. Everything here is O(n!)-flavored and only meant
// for n <= 8.
#ifndef AMOEBA_TESTS_ORACLES_HPP
#define AMOEBA_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba::testing {

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

inline bool brute_is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    for (const Permutation& sigma : all_permutations(g.order())) {
        if (apply_permutation(g, sigma) == h) return true;
    }
    return false;
}

inline std::vector<Permutation> brute_isomorphisms(const Graph& g, const Graph& h) {
    std::vector<Permutation> out;
    if (g.order() != h.order()) return out;
    for (const Permutation& sigma : all_permutations(g.order())) {
        if (apply_permutation(g, sigma) == h) out.push_back(sigma);
    }
    return out;
}

/// Closure of the generated subgroup: words in the generators, grown by
/// right composition until no new element appears.
inline std::set<Permutation> brute_closure(const std::vector<Permutation>& gens, int degree) {
    std::set<Permutation> closure{Permutation::identity(degree)};
    std::vector<Permutation> queue{Permutation::identity(degree)};
    while (!queue.empty()) {
        Permutation current = queue.back();
        queue.pop_back();
        for (const Permutation& g : gens) {
            Permutation next = compose(current, g);
            if (closure.insert(next).second) queue.push_back(next);
        }
    }
    return closure;
}

/// Key of the isomorphism class of g by exhaustive relabeling: the smallest
/// edge list over all permutations.
inline std::vector<Edge> brute_class_key(const Graph& g) {
    std::vector<Edge> best = g.edges();
    for (const Permutation& sigma : all_permutations(g.order())) {
        std::vector<Edge> candidate = apply_permutation(g, sigma).edges();
        if (candidate < best) best = candidate;
    }
    return best;
}

inline std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t b = 0; b < pairs.size(); ++b) {
            if (mask >> b & 1) edges.push_back(pairs[b]);
        }
        out.push_back(Graph::from_edges(n, std::move(edges)));
    }
    return out;
}

/// Partition of all labeled graphs on n vertices into isomorphism classes,
/// by the exhaustive key.
inline std::map<std::vector<Edge>, std::vector<Graph>> brute_iso_classes(int n) {
    std::map<std::vector<Edge>, std::vector<Graph>> classes;
    for (Graph& g : all_labeled_graphs(n)) {
        classes[brute_class_key(g)].push_back(std::move(g));
    }
    return classes;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace amoeba::testing

#endif
