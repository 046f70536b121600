#include "amoeba/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace amoeba {

namespace {

int smallest_moved_point(const Permutation& p) {
    for (int i = 0; i < p.degree(); ++i) {
        if (p(i) != i) return i;
    }
    return -1;
}

void push_unique(std::vector<Permutation>& list, const Permutation& p) {
    if (std::find(list.begin(), list.end(), p) == list.end()) list.push_back(p);
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
    if (degree < 1) throw std::invalid_argument("group degree must be positive");
    return PermGroup(degree);
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators, int degree) {
    PermGroup group(degree);
    if (degree < 1) throw std::invalid_argument("group degree must be positive");
    for (const Permutation& g : generators) {
        if (g.degree() != degree) {
            throw std::invalid_argument("generator degree does not match group degree");
        }
        if (!g.is_identity()) push_unique(group.generators_, g);
    }
    group.build();
    return group;
}

std::vector<Permutation> PermGroup::effective_gens(size_t level) const {
    std::vector<Permutation> gens;
    for (size_t l = level; l < levels_.size(); ++l) {
        for (const Permutation& g : levels_[l].gens) push_unique(gens, g);
    }
    return gens;
}

void PermGroup::rebuild_level(size_t level) {
    Level& lv = levels_[level];
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit_order.clear();
    lv.transversal[lv.base_point] = Permutation::identity(degree_);
    lv.orbit_order.push_back(lv.base_point);
    std::vector<Permutation> gens = effective_gens(level);
    std::deque<int> queue{lv.base_point};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const Permutation& s : gens) {
            int image = s(q);
            if (!lv.transversal[image]) {
                lv.transversal[image] = compose(s, *lv.transversal[q]);
                lv.orbit_order.push_back(image);
                queue.push_back(image);
            }
        }
    }
}

std::pair<Permutation, size_t> PermGroup::strip(Permutation p, size_t start) const {
    for (size_t l = start; l < levels_.size(); ++l) {
        int image = p(levels_[l].base_point);
        const auto& rep = levels_[l].transversal[image];
        if (!rep) return {std::move(p), l};
        p = compose(rep->inverse(), p);
    }
    return {std::move(p), levels_.size()};
}

void PermGroup::place(Permutation residue, size_t level) {
    if (level == levels_.size()) {
        Level lv;
        lv.base_point = smallest_moved_point(residue);
        levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(std::move(residue));
}

void PermGroup::build() {
    for (const Permutation& g : generators_) {
        auto [residue, level] = strip(g, 0);
        if (!residue.is_identity()) {
            place(std::move(residue), level);
            rebuild_level(level);
        }
    }
    // Verify levels bottom-up: every Schreier generator must sift to the
    // identity through the deeper chain. A failed sift adds a strong
    // generator and sends verification back down to its level.
    if (levels_.empty()) return;
    size_t level = levels_.size();
    while (level-- > 0) {
        rebuild_level(level);
        bool clean = true;
        const Level& lv = levels_[level];
        std::vector<Permutation> gens = effective_gens(level);
        for (size_t qi = 0; qi < lv.orbit_order.size() && clean; ++qi) {
            int q = lv.orbit_order[qi];
            const Permutation& u_q = *lv.transversal[q];
            for (const Permutation& s : gens) {
                Permutation schreier =
                    compose(lv.transversal[s(q)]->inverse(), compose(s, u_q));
                if (schreier.is_identity()) continue;
                auto [residue, at] = strip(std::move(schreier), level + 1);
                if (!residue.is_identity()) {
                    place(std::move(residue), at);
                    level = at + 1;  // re-verify from the changed level down
                    clean = false;
                    break;
                }
            }
        }
    }
}

std::vector<Permutation> PermGroup::strong_generators() const {
    return effective_gens(0);
}

std::vector<int> PermGroup::base() const {
    std::vector<int> points;
    points.reserve(levels_.size());
    for (const Level& lv : levels_) points.push_back(lv.base_point);
    return points;
}

BigUint PermGroup::order() const {
    BigUint result(1);
    for (const Level& lv : levels_) {
        result *= BigUint(static_cast<uint64_t>(lv.orbit_order.size()));
    }
    return result;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) {
        throw std::invalid_argument("membership test degree mismatch");
    }
    auto [residue, level] = strip(p, 0);
    (void)level;
    return residue.is_identity();
}

bool PermGroup::is_symmetric() const {
    return order() == BigUint::factorial(degree_);
}

std::vector<int> PermGroup::orbit(int point) const {
    if (point < 0 || point >= degree_) throw std::invalid_argument("orbit point out of range");
    std::vector<bool> seen(degree_, false);
    seen[point] = true;
    std::deque<int> queue{point};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const Permutation& g : generators_) {
            int image = g(q);
            if (!seen[image]) {
                seen[image] = true;
                queue.push_back(image);
            }
        }
    }
    std::vector<int> result;
    for (int i = 0; i < degree_; ++i) {
        if (seen[i]) result.push_back(i);
    }
    return result;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> root(degree_);
    for (int i = 0; i < degree_; ++i) root[i] = i;
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const Permutation& g : generators_) {
        for (int i = 0; i < degree_; ++i) root[find(i)] = find(g(i));
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(degree_, -1);
    for (int i = 0; i < degree_; ++i) {
        int r = find(i);
        if (block_of[r] == -1) {
            block_of[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[r]].push_back(i);
    }
    return blocks;
}

PermGroup PermGroup::stabilizer(int point) const {
    if (point < 0 || point >= degree_) {
        throw std::invalid_argument("stabilizer point out of range");
    }
    // Orbit of the point with a transversal, then Schreier generators.
    std::vector<std::optional<Permutation>> rep(degree_);
    rep[point] = Permutation::identity(degree_);
    std::vector<int> order{point};
    std::deque<int> queue{point};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const Permutation& g : generators_) {
            int image = g(q);
            if (!rep[image]) {
                rep[image] = compose(g, *rep[q]);
                order.push_back(image);
                queue.push_back(image);
            }
        }
    }
    std::vector<Permutation> gens;
    for (int q : order) {
        for (const Permutation& g : generators_) {
            Permutation schreier = compose(rep[g(q)]->inverse(), compose(g, *rep[q]));
            if (!schreier.is_identity()) push_unique(gens, schreier);
        }
    }
    return from_generators(std::move(gens), degree_);
}

bool PermGroup::is_transitive_on(const std::vector<int>& subset) const {
    if (subset.empty()) return true;
    std::vector<bool> member(degree_, false);
    for (int x : subset) {
        if (x < 0 || x >= degree_) throw std::invalid_argument("subset point out of range");
        member[x] = true;
    }
    for (const Permutation& g : generators_) {
        for (int x : subset) {
            if (!member[g(x)]) {
                throw std::invalid_argument("subset is not invariant under the group");
            }
        }
    }
    std::vector<int> reached = orbit(subset[0]);
    size_t count = 0;
    for (int x : reached) {
        if (member[x]) ++count;
    }
    return count == subset.size();
}

PermGroup PermGroup::embedded(int new_degree, int offset) const {
    std::vector<Permutation> gens;
    gens.reserve(generators_.size());
    for (const Permutation& g : generators_) gens.push_back(g.shifted(offset, new_degree));
    return from_generators(std::move(gens), new_degree);
}

PermGroup direct_product_embed(const PermGroup& a, const PermGroup& b) {
    if (a.degree() != b.degree()) {
        throw std::invalid_argument("direct product factors must share a degree");
    }
    std::vector<bool> moved(a.degree(), false);
    for (const Permutation& g : a.generators()) {
        for (int i = 0; i < a.degree(); ++i) {
            if (g(i) != i) moved[i] = true;
        }
    }
    for (const Permutation& g : b.generators()) {
        for (int i = 0; i < b.degree(); ++i) {
            if (g(i) != i && moved[i]) {
                throw std::invalid_argument("direct product factors have overlapping support");
            }
        }
    }
    std::vector<Permutation> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return PermGroup::from_generators(std::move(gens), a.degree());
}

}  // namespace amoeba
