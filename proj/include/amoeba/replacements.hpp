#ifndef AMOEBA_REPLACEMENTS_HPP
#define AMOEBA_REPLACEMENTS_HPP

#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/isomorphism.hpp"
#include "amoeba/perm_group.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

/// A feasible edge-replacement source -> target of a graph G: removing
/// `source` and adding `target` yields a graph equal to the copy of G under
/// `representative`. Trivial means source == target (always feasible).
struct EdgeReplacement {
    Edge source;
    Edge target;
    Permutation representative;
    bool trivial = false;

    bool operator==(const EdgeReplacement& other) const = default;
};

/// All feasible edge-replacements of g, trivial ones included, sorted by
/// (source, target). The representative is the first isomorphism found by
/// the deterministic backtracking order.
std::vector<EdgeReplacement> feasible_replacements(const Graph& g);

/// The full coset realizing one replacement: A_G composed with the
/// representative; its size is |Aut(g)|. Throws std::invalid_argument if the
/// replacement is not feasible for g.
std::vector<Permutation> replacement_coset(const Graph& g, const EdgeReplacement& rep,
                                           int aut_cap = kFullAutomorphismOrderCap);

/// Generating set for the edge-replacement group: generators of A_G plus one
/// representative per nontrivial replacement.
std::vector<Permutation> generator_set(const Graph& g);
std::vector<Permutation> generator_set(const Graph& g,
                                       const std::vector<EdgeReplacement>& replacements);

/// The group generated by all permutations realizing feasible
/// edge-replacements of g.
PermGroup amoeba_group(const Graph& g);

}  // namespace amoeba

#endif
