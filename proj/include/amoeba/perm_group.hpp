#ifndef AMOEBA_PERM_GROUP_HPP
#define AMOEBA_PERM_GROUP_HPP

#include <optional>
#include <vector>

#include "amoeba/big_uint.hpp"
#include "amoeba/permutation.hpp"

namespace amoeba {

/// Permutation group given by generators, represented by a base and strong
/// generating set (deterministic Schreier-Sims, explicit transversals).
/// Immutable after construction; every query is read-only.
class PermGroup {
public:
    static PermGroup from_generators(std::vector<Permutation> generators, int degree);
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::vector<Permutation> strong_generators() const;
    std::vector<int> base() const;

    /// Exact order: product of the basic orbit lengths.
    BigUint order() const;
    /// Membership by sifting through the stabilizer chain.
    bool contains(const Permutation& p) const;
    bool is_symmetric() const;

    std::vector<int> orbit(int point) const;
    /// Orbit partition of {0..degree-1}, blocks sorted, ordered by minimum.
    std::vector<std::vector<int>> orbits() const;

    /// Point stabilizer as a fresh group (Schreier generators on the orbit
    /// of `point`, then a new chain).
    PermGroup stabilizer(int point) const;

    /// True iff `subset` is a single orbit of the group; the subset must be
    /// invariant under every generator (throws std::invalid_argument if not).
    bool is_transitive_on(const std::vector<int>& subset) const;

    /// The same group acting on a larger point set, translated by `offset`.
    PermGroup embedded(int new_degree, int offset) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;  // fix all earlier base points
        std::vector<std::optional<Permutation>> transversal;
        std::vector<int> orbit_order;   // discovery order
    };

    explicit PermGroup(int degree) : degree_(degree) {}

    std::vector<Permutation> effective_gens(size_t level) const;
    void rebuild_level(size_t level);
    // Sifts p through levels [start..); returns the residue and the level
    // index where sifting stopped (levels_.size() when fully sifted).
    std::pair<Permutation, size_t> strip(Permutation p, size_t start) const;
    // Places a non-identity residue at `level`, creating the level if needed.
    void place(Permutation residue, size_t level);
    void build();

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
};

/// Group generated by two groups of the same degree with disjoint supports
/// (throws std::invalid_argument on overlap). Its order is |a| * |b|.
PermGroup direct_product_embed(const PermGroup& a, const PermGroup& b);

}  // namespace amoeba

#endif
