#ifndef AMOEBA_ISOMORPHISM_HPP
#define AMOEBA_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

/// Total-order key identifying an isomorphism class among graphs of equal
/// order: equal keys iff isomorphic.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::vector<uint8_t> key) : key_(std::move(key)) {}

    const std::vector<uint8_t>& bytes() const { return key_; }
    std::string hex() const;

    bool operator==(const CanonicalForm& other) const = default;
    auto operator<=>(const CanonicalForm& other) const = default;

private:
    std::vector<uint8_t> key_;
};

struct CanonicalFormHash {
    size_t operator()(const CanonicalForm& form) const;
};

/// Decides G ~ H by degree/neighborhood refinement plus backtracking.
/// Graphs of different order compare as non-isomorphic.
bool is_isomorphic(const Graph& g, const Graph& h);

/// First sigma (in deterministic backtracking order) with
/// apply_permutation(g, sigma) == h, or nullopt.
std::optional<Permutation> first_isomorphism(const Graph& g, const Graph& h);

/// All sigma with apply_permutation(g, sigma) == h. Requires equal orders;
/// the result has size 0 or exactly |Aut(g)|.
std::vector<Permutation> enumerate_isomorphisms(const Graph& g, const Graph& h);

inline constexpr int kFullAutomorphismOrderCap = 12;

/// The full set A_G = {sigma | apply_permutation(G, sigma) == G}. Throws
/// CapError above `max_order` vertices: full enumeration can reach n!
/// elements, callers needing only a generating set should use
/// automorphism_generators.
std::vector<Permutation> automorphisms(const Graph& g,
                                       int max_order = kFullAutomorphismOrderCap);

/// Generating set of A_G of size O(n^2): transversal representatives of the
/// vertex-wise stabilizer chain. Never enumerates the group.
std::vector<Permutation> automorphism_generators(const Graph& g);

/// Lexicographically minimal row-major upper-triangle adjacency bit string
/// over the leaves of the individualization-refinement tree (with discovered
/// automorphisms pruning equivalent branches).
CanonicalForm canonical_form(const Graph& g);

}  // namespace amoeba

#endif
