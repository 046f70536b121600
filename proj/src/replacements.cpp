#include "amoeba/replacements.hpp"

#include <algorithm>
#include <stdexcept>

namespace amoeba {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    return g.degree_sequence();
}

Graph replace_edge(const Graph& g, Edge source, Edge target) {
    return g.with_edge_removed(source.first, source.second)
        .with_edge_added(target.first, target.second);
}

}  // namespace

std::vector<EdgeReplacement> feasible_replacements(const Graph& g) {
    std::vector<EdgeReplacement> result;
    const int n = g.order();
    const CanonicalForm key = canonical_form(g);
    const std::vector<int> degrees = sorted_degrees(g);

    std::vector<Edge> non_edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) non_edges.emplace_back(u, v);
        }
    }

    for (Edge e : g.edges()) {
        result.push_back({e, e, Permutation::identity(n), true});
        Graph removed = g.with_edge_removed(e.first, e.second);
        for (Edge target : non_edges) {
            Graph candidate = removed.with_edge_added(target.first, target.second);
            if (sorted_degrees(candidate) != degrees) continue;
            if (canonical_form(candidate) != key) continue;
            auto sigma = first_isomorphism(g, candidate);
            result.push_back({e, target, *sigma, false});
        }
    }
    std::sort(result.begin(), result.end(), [](const EdgeReplacement& a, const EdgeReplacement& b) {
        return std::pair(a.source, a.target) < std::pair(b.source, b.target);
    });
    return result;
}

std::vector<Permutation> replacement_coset(const Graph& g, const EdgeReplacement& rep,
                                           int aut_cap) {
    Graph replaced = replace_edge(g, rep.source, rep.target);
    if (apply_permutation(g, rep.representative) != replaced) {
        throw std::invalid_argument("replacement is not feasible for this graph");
    }
    std::vector<Permutation> coset;
    for (const Permutation& a : automorphisms(g, aut_cap)) {
        coset.push_back(compose(a, rep.representative));
    }
    std::sort(coset.begin(), coset.end());
    return coset;
}

std::vector<Permutation> generator_set(const Graph& g,
                                       const std::vector<EdgeReplacement>& replacements) {
    std::vector<Permutation> gens = automorphism_generators(g);
    for (const EdgeReplacement& rep : replacements) {
        if (rep.trivial) continue;
        if (std::find(gens.begin(), gens.end(), rep.representative) == gens.end()) {
            gens.push_back(rep.representative);
        }
    }
    return gens;
}

std::vector<Permutation> generator_set(const Graph& g) {
    return generator_set(g, feasible_replacements(g));
}

PermGroup amoeba_group(const Graph& g) {
    return PermGroup::from_generators(generator_set(g), g.order());
}

}  // namespace amoeba
