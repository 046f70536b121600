#include "amoeba/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

// One round: signature of v is (color[v], sorted colors of its neighbors);
// new colors are dense ranks of the sorted distinct signatures. Iterates to a
// fixed point. Rank assignment depends only on signature order, so equally
// colored vertices of isomorphic graphs end up with equal ranks.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    const int n = g.order();
    int color_count = 0;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> signatures(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v) + 1);
            sig.push_back(colors[v]);
            for (int u = 0; u < n; ++u) {
                if (g.adjacent(v, u)) sig.push_back(colors[u]);
            }
            std::sort(sig.begin() + 1, sig.end());
            signatures[v] = {std::move(sig), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return signatures[a].first < signatures[b].first;
        });
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && signatures[order[i]].first != signatures[order[i - 1]].first) ++rank;
            next[order[i]] = rank;
        }
        if (rank + 1 == color_count) return next;
        color_count = rank + 1;
        colors = std::move(next);
        if (color_count == n) return colors;
    }
}

std::vector<int> stable_coloring(const Graph& g) {
    return refine_colors(g, std::vector<int>(g.order(), 0));
}

// Multiset of (color, class size); label-invariant summary used to reject
// non-isomorphic pairs before any search.
std::vector<std::pair<int, int>> color_spectrum(const std::vector<int>& colors) {
    std::map<int, int> sizes;
    for (int c : colors) ++sizes[c];
    return {sizes.begin(), sizes.end()};
}

// Backtracking over vertex maps phi : V(g) -> V(h) in lexicographic order
// (phi(0), phi(1), ...). `forced` pins a prefix of images (-1 = free). Calls
// `emit(phi)` for every full isomorphism found; stops when emit returns false.
template <typename Emit>
void search_isomorphisms(const Graph& g, const Graph& h, const std::vector<int>& colors_g,
                         const std::vector<int>& colors_h, const std::vector<int>& forced,
                         Emit&& emit) {
    const int n = g.order();
    std::vector<int> phi(n, -1);
    std::vector<bool> used(n, false);

    // recursion as explicit lambda; returns false to abort the whole search
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return emit(phi);
        int first = 0, last = n;
        if (forced[v] >= 0) {
            first = forced[v];
            last = forced[v] + 1;
        }
        for (int w = first; w < last; ++w) {
            if (used[w] || colors_h[w] != colors_g[v]) continue;
            if (g.degree(v) != h.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                if (g.adjacent(v, u) != h.adjacent(w, phi[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            phi[v] = w;
            used[w] = true;
            if (!self(self, v + 1)) return false;
            used[w] = false;
            phi[v] = -1;
        }
        return true;
    };
    rec(rec, 0);
}

bool compatible(const Graph& g, const Graph& h, std::vector<int>& colors_g,
                std::vector<int>& colors_h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    colors_g = stable_coloring(g);
    colors_h = stable_coloring(h);
    return color_spectrum(colors_g) == color_spectrum(colors_h);
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    return first_isomorphism(g, h).has_value();
}

std::optional<Permutation> first_isomorphism(const Graph& g, const Graph& h) {
    std::vector<int> colors_g, colors_h;
    if (!compatible(g, h, colors_g, colors_h)) return std::nullopt;
    std::optional<Permutation> result;
    std::vector<int> forced(g.order(), -1);
    search_isomorphisms(g, h, colors_g, colors_h, forced, [&](const std::vector<int>& phi) {
        result = Permutation(phi).inverse();
        return false;  // first hit wins
    });
    return result;
}

std::vector<Permutation> enumerate_isomorphisms(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) {
        throw std::invalid_argument("enumerate_isomorphisms requires equal orders");
    }
    std::vector<int> colors_g, colors_h;
    std::vector<Permutation> result;
    if (!compatible(g, h, colors_g, colors_h)) return result;
    std::vector<int> forced(g.order(), -1);
    search_isomorphisms(g, h, colors_g, colors_h, forced, [&](const std::vector<int>& phi) {
        result.push_back(Permutation(phi).inverse());
        return true;
    });
    return result;
}

std::vector<Permutation> automorphisms(const Graph& g, int max_order) {
    if (g.order() > max_order) {
        throw CapError("automorphism enumeration capped at " + std::to_string(max_order) +
                       " vertices; request generators only");
    }
    return enumerate_isomorphisms(g, g);
}

std::vector<Permutation> automorphism_generators(const Graph& g) {
    const int n = g.order();
    std::vector<int> colors = stable_coloring(g);
    std::vector<Permutation> gens;
    // Transversal representatives: one automorphism fixing 0..i-1 pointwise
    // and mapping i -> j, for every attainable j > i. Their union generates
    // Aut(g) level by level.
    std::vector<int> forced(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (colors[j] != colors[i]) continue;
            forced[i] = j;
            search_isomorphisms(g, g, colors, colors, forced,
                                [&](const std::vector<int>& phi) {
                                    gens.push_back(Permutation(phi));
                                    return false;
                                });
        }
        forced[i] = i;
    }
    if (gens.empty()) gens.push_back(Permutation::identity(n));
    return gens;
}

namespace {

std::vector<uint8_t> adjacency_key(const Graph& g, const std::vector<int>& position) {
    const int n = g.order();
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[position[v]] = v;
    std::vector<uint8_t> key;
    key.push_back(static_cast<uint8_t>(n));
    int bit = 7;
    uint8_t cur = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (g.adjacent(vertex_at[p], vertex_at[q])) cur |= static_cast<uint8_t>(1u << bit);
            if (--bit < 0) {
                key.push_back(cur);
                cur = 0;
                bit = 7;
            }
        }
    }
    if (bit != 7) key.push_back(cur);
    return key;
}

struct CanonicalSearch {
    const Graph& g;
    std::vector<uint8_t> best_key;
    std::vector<int> best_position;
    bool have_best = false;
    std::vector<Permutation> autos;  // automorphisms discovered at equal leaves

    explicit CanonicalSearch(const Graph& graph) : g(graph) {}

    void leaf(const std::vector<int>& position) {
        std::vector<uint8_t> key = adjacency_key(g, position);
        if (!have_best || key < best_key) {
            best_key = std::move(key);
            best_position = position;
            have_best = true;
            return;
        }
        if (key != best_key) return;
        // Two labelings hitting the same minimal string: their difference is
        // an automorphism, kept for pruning equivalent branches.
        const int n = g.order();
        std::vector<int> vertex_at_best(n);
        for (int v = 0; v < n; ++v) vertex_at_best[best_position[v]] = v;
        std::vector<int> phi(n);
        for (int v = 0; v < n; ++v) phi[v] = vertex_at_best[position[v]];
        Permutation gamma{std::move(phi)};
        if (std::find(autos.begin(), autos.end(), gamma) == autos.end()) {
            autos.push_back(std::move(gamma));
        }
    }

    // Target cell: smallest non-singleton class, ties by smaller color.
    static int target_color(const std::vector<int>& colors, int n) {
        std::map<int, int> sizes;
        for (int c : colors) ++sizes[c];
        int best_color = -1, best_size = n + 1;
        for (auto [c, s] : sizes) {
            if (s >= 2 && s < best_size) {
                best_size = s;
                best_color = c;
            }
        }
        return best_color;
    }

    void run(std::vector<int> colors, std::vector<int>& prefix) {
        colors = refine_colors(g, colors);
        const int n = g.order();
        int max_color = *std::max_element(colors.begin(), colors.end());
        if (max_color + 1 == n) {
            leaf(colors);  // discrete: colors are positions
            return;
        }
        int cell_color = target_color(colors, n);
        std::vector<int> cell;
        for (int v = 0; v < n; ++v) {
            if (colors[v] == cell_color) cell.push_back(v);
        }
        // Orbit pruning: skip cell vertices equivalent to an explored one
        // under discovered automorphisms that fix the branching prefix.
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
        for (const Permutation& gamma : autos) {
            bool fixes_prefix = true;
            for (int p : prefix) {
                if (gamma(p) != p) {
                    fixes_prefix = false;
                    break;
                }
            }
            if (!fixes_prefix) continue;
            for (int v = 0; v < n; ++v) unite(v, gamma(v));
        }
        std::vector<int> explored_roots;
        for (int v : cell) {
            int root = find(v);
            if (std::find(explored_roots.begin(), explored_roots.end(), root) !=
                explored_roots.end()) {
                continue;
            }
            std::vector<int> branched = colors;
            branched[v] = -1;  // unique minimal color, refined into a split
            prefix.push_back(v);
            run(std::move(branched), prefix);
            prefix.pop_back();
            explored_roots.push_back(find(v));
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalSearch search(g);
    std::vector<int> prefix;
    search.run(std::vector<int>(g.order(), 0), prefix);
    return CanonicalForm(std::move(search.best_key));
}

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key_.size() * 2);
    for (uint8_t b : key_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

size_t CanonicalFormHash::operator()(const CanonicalForm& form) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : form.bytes()) {
        h = (h ^ b) * 1099511628211ull;
    }
    return h;
}

}  // namespace amoeba
