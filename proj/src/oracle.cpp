#include "amoeba/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "amoeba/classifier.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/io.hpp"
#include "amoeba/isomorphism.hpp"

namespace amoeba {

namespace {

struct CopyStateHash {
    size_t operator()(const CopyState& s) const {
        return s[0] * 1099511628211ull ^ (s[1] + 0x9e3779b97f4a7c15ull);
    }
};

// Pattern with isolated vertices dropped; a copy is determined by edges only.
Graph without_isolates(const Graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 0) keep.push_back(v);
    }
    if (keep.empty()) return Graph(1);
    std::vector<int> position(g.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
    return Graph::from_edges(static_cast<int>(keep.size()), std::move(edges));
}

// triangular index of the pair; C(16,2) = 120 slots fit the 128-bit mask
int slot_of(int u, int v, int host) {
    if (u > v) std::swap(u, v);
    return u * (2 * host - u - 1) / 2 + (v - u - 1);
}

void set_slot(CopyState& s, int slot) { s[slot >> 6] |= 1ull << (slot & 63); }
bool has_slot(const CopyState& s, int slot) { return (s[slot >> 6] >> (slot & 63)) & 1; }
void clear_slot(CopyState& s, int slot) { s[slot >> 6] &= ~(1ull << (slot & 63)); }

long long falling_factorial(int host, int k) {
    long long result = 1;
    for (int i = 0; i < k; ++i) result *= host - i;
    return result;
}

}  // namespace

std::vector<CopyState> enumerate_copies(const Graph& g, int host_order, long long budget) {
    if (host_order < g.order()) {
        throw std::invalid_argument("host order smaller than the pattern order");
    }
    if (host_order > 16) {
        throw CapError("copy enumeration supports host orders up to 16");
    }
    Graph pattern = without_isolates(g);
    const int k = pattern.size() == 0 ? 0 : pattern.order();
    if (falling_factorial(host_order, k) > budget) {
        throw CapError("copy enumeration exceeds the state budget");
    }

    std::unordered_set<CopyState, CopyStateHash> seen;
    std::vector<CopyState> copies;
    if (k == 0) {
        copies.push_back(CopyState{0, 0});
        return copies;
    }
    // all injections of the pattern vertices into the host
    std::vector<int> image(k, -1);
    std::vector<bool> used(host_order, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == k) {
            CopyState state{0, 0};
            for (auto [a, b] : pattern.edges()) {
                set_slot(state, slot_of(image[a], image[b], host_order));
            }
            if (seen.insert(state).second) copies.push_back(state);
            return;
        }
        for (int w = 0; w < host_order; ++w) {
            if (used[w]) continue;
            image[v] = w;
            used[w] = true;
            self(self, v + 1);
            used[w] = false;
            image[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(copies.begin(), copies.end());
    return copies;
}

std::vector<long long> replacement_reachability(const Graph& g, int host_order,
                                                long long budget) {
    std::vector<CopyState> copies = enumerate_copies(g, host_order, budget);
    if (static_cast<long long>(copies.size()) > budget) {
        throw CapError("reachability exceeds the state budget");
    }
    std::unordered_set<CopyState, CopyStateHash> copy_set(copies.begin(), copies.end());

    std::vector<int> slots;  // every host pair slot
    for (int u = 0; u < host_order; ++u) {
        for (int v = u + 1; v < host_order; ++v) slots.push_back(slot_of(u, v, host_order));
    }

    std::unordered_set<CopyState, CopyStateHash> visited;
    std::vector<long long> component_sizes;
    for (const CopyState& start : copies) {
        if (visited.count(start)) continue;
        long long size = 0;
        std::deque<CopyState> queue{start};
        visited.insert(start);
        while (!queue.empty()) {
            CopyState state = queue.front();
            queue.pop_front();
            ++size;
            for (int removed : slots) {
                if (!has_slot(state, removed)) continue;
                CopyState base = state;
                clear_slot(base, removed);
                for (int added : slots) {
                    if (added == removed || has_slot(base, added)) continue;
                    CopyState next = base;
                    set_slot(next, added);
                    if (!copy_set.count(next) || visited.count(next)) continue;
                    visited.insert(next);
                    queue.push_back(next);
                }
            }
        }
        component_sizes.push_back(size);
    }
    std::sort(component_sizes.rbegin(), component_sizes.rend());
    return component_sizes;
}

bool oracle_is_local(const Graph& g, long long budget) {
    return replacement_reachability(g, g.order(), budget).size() == 1;
}

bool oracle_is_global(const Graph& g, long long budget) {
    return replacement_reachability(g, g.order() + 1, budget).size() == 1;
}

std::vector<Graph> all_graphs_up_to_isomorphism(int n) {
    if (n < 1 || n > 8) {
        throw CapError("labeled-graph census supports 1 to 8 vertices");
    }
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    }
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<Graph> classes;
    for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        std::vector<Edge> edges;
        for (int b = 0; b < pairs; ++b) {
            if (mask >> b & 1) edges.push_back(all_pairs[b]);
        }
        Graph g = Graph::from_edges(n, std::move(edges));
        if (seen.insert(canonical_form(g)).second) classes.push_back(std::move(g));
    }
    return classes;
}

std::vector<SweepEntry> sweep(int n, long long budget) {
    if (n < 1 || n > 6) {
        throw CapError("sweep supports 1 to 6 vertices");
    }
    std::vector<SweepEntry> entries;
    for (const Graph& g : all_graphs_up_to_isomorphism(n)) {
        SweepEntry entry;
        entry.graph6 = to_graph6(g);
        entry.classifier_local = is_local_amoeba(g);
        entry.classifier_global = is_global_amoeba(g);
        entry.oracle_local = oracle_is_local(g, budget);
        entry.oracle_global = oracle_is_global(g, budget);
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace amoeba
