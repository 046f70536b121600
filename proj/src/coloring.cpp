#include "amoeba/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> rows(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
    }
    return rows;
}

void max_clique_rec(const std::vector<uint32_t>& rows, uint32_t candidates, int depth,
                    int& best) {
    if (depth + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
        best = std::max(best, depth);
        return;
    }
    uint32_t rest = candidates;
    while (rest) {
        if (depth + std::popcount(rest) <= best) return;
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        max_clique_rec(rows, rest & rows[v], depth + 1, best);
    }
}

bool colorable_rec(const std::vector<uint32_t>& rows, const std::vector<int>& order,
                   std::vector<int>& color, size_t idx, int k) {
    if (idx == order.size()) return true;
    int v = order[idx];
    int used_max = 0;
    for (size_t i = 0; i < idx; ++i) used_max = std::max(used_max, color[order[i]] + 1);
    // allow at most one brand-new color to break the color-permutation symmetry
    int limit = std::min(k, used_max + 1);
    for (int c = 0; c < limit; ++c) {
        bool conflict = false;
        uint32_t nbrs = rows[v];
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (color[u] == c) {
                conflict = true;
                break;
            }
        }
        if (conflict) continue;
        color[v] = c;
        if (colorable_rec(rows, order, color, idx + 1, k)) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

int clique_number(const Graph& g, int max_order) {
    if (g.order() > max_order) {
        throw CapError("exact clique solver capped at " + std::to_string(max_order) +
                       " vertices");
    }
    auto rows = adjacency_masks(g);
    int best = 1;
    uint32_t all = g.order() == 32 ? ~0u : (1u << g.order()) - 1;
    max_clique_rec(rows, all, 0, best);
    return best;
}

int chromatic_number(const Graph& g, int max_order) {
    if (g.order() > max_order) {
        throw CapError("exact chromatic solver capped at " + std::to_string(max_order) +
                       " vertices");
    }
    if (g.size() == 0) return 1;
    auto rows = adjacency_masks(g);
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = clique_number(g, max_order); k <= g.order(); ++k) {
        std::vector<int> color(g.order(), -1);
        if (colorable_rec(rows, order, color, 0, k)) return k;
    }
    return g.order();  // unreachable: K_n is n-colorable
}

}  // namespace amoeba
