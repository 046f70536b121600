#include "amoeba/classifier.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "amoeba/coloring.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/io.hpp"
#include "amoeba/perm_group.hpp"
#include "amoeba/replacements.hpp"

namespace amoeba {

bool local_degree_prefilter(const Graph& g) {
    std::vector<bool> present(g.order(), false);
    for (int v = 0; v < g.order(); ++v) present[g.degree(v)] = true;
    for (int d = g.min_degree(); d <= g.max_degree(); ++d) {
        if (!present[d]) return false;
    }
    return true;
}

bool global_degree_prefilter(const Graph& g) {
    // degree values must be exactly [1..Delta], optionally preceded by 0
    std::vector<int> values = g.degree_values();
    size_t start = 0;
    if (values[0] == 0) start = 1;
    int expected = 1;
    for (size_t i = start; i < values.size(); ++i) {
        if (values[i] != expected++) return false;
    }
    std::vector<int> seq = g.degree_sequence();
    for (int i = 0; i < g.order(); ++i) {
        if (seq[i] > g.order() + 1 - (i + 1)) return false;
    }
    return true;
}

namespace {

void check_group_cap(int points, int max_n) {
    if (points > max_n) {
        throw CapError("group construction capped at " + std::to_string(max_n) +
                       " points (requested " + std::to_string(points) +
                       "); raise the cap to proceed");
    }
}

}  // namespace

bool is_local_amoeba(const Graph& g, int max_n) {
    if (!local_degree_prefilter(g)) return false;  // sound: skips the group build
    check_group_cap(g.order(), max_n);
    return amoeba_group(g).order() == BigUint::factorial(g.order());
}

bool is_global_amoeba(const Graph& g, int max_n) {
    if (!global_degree_prefilter(g)) return false;
    check_group_cap(g.order() + 1, max_n);
    return is_local_amoeba(disjoint_union(g, Graph(1)), max_n);
}

namespace {

DecrementCheck decrement_with_group(const Graph& g, const PermGroup& group) {
    DecrementCheck result;
    result.holds = true;
    for (int x = 0; x < g.order(); ++x) {
        if (g.degree(x) < 2) continue;
        int wanted = g.degree(x) - 1;
        int witness = -1;
        for (int y : group.orbit(x)) {
            if (g.degree(y) == wanted) {
                witness = y;
                break;
            }
        }
        if (witness == -1) {
            result.holds = false;
        } else {
            result.witnesses[x] = witness;
        }
    }
    return result;
}

}  // namespace

DecrementCheck degree_decrement_check(const Graph& g, int max_n) {
    check_group_cap(g.order(), max_n);
    return decrement_with_group(g, amoeba_group(g));
}

long long integer_sqrt(long long x) {
    if (x < 0) throw std::invalid_argument("integer_sqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

namespace {

BoundReport bounds_for(const Graph& g, bool global) {
    BoundReport report;
    report.applicable = global && g.min_degree() == 1;
    if (!report.applicable) return report;
    const long long n = g.order();
    const long long m = g.size();

    report.edge_count.value = m;
    report.edge_count.bound = n * n / 4;
    report.edge_count.satisfied = m <= report.edge_count.bound;
    report.edge_count.tight = m == report.edge_count.bound;

    long long color_bound = n / 2 + 1;
    if (g.order() <= kExactSolverCap) {
        BoundCheck clique;
        clique.value = clique_number(g);
        clique.bound = color_bound;
        clique.satisfied = clique.value <= clique.bound;
        clique.tight = clique.value == clique.bound;
        report.clique = clique;

        BoundCheck chromatic;
        chromatic.value = chromatic_number(g);
        chromatic.bound = color_bound;
        chromatic.satisfied = chromatic.value <= chromatic.bound;
        chromatic.tight = chromatic.value == chromatic.bound;
        report.chromatic = chromatic;
    }

    report.max_degree.value = g.max_degree();
    report.max_degree.bound = (1 + integer_sqrt(1 - 8 * n + 16 * m)) / 2;
    report.max_degree.satisfied = report.max_degree.value <= report.max_degree.bound;
    report.max_degree.tight = report.max_degree.value == report.max_degree.bound;
    return report;
}

}  // namespace

BoundReport verify_extremal_bounds(const Graph& g, int max_n) {
    return bounds_for(g, is_global_amoeba(g, max_n));
}

AmoebaReport classify(const Graph& g, const ClassifyOptions& options) {
    auto started = std::chrono::steady_clock::now();
    check_group_cap(g.order(), options.max_n);

    AmoebaReport report;
    report.graph_id = canonical_form(g);
    report.graph6 = to_graph6(g);
    report.n = g.order();
    report.m = g.size();
    report.degree_sequence = g.degree_sequence();
    report.prefilter_local_degrees = local_degree_prefilter(g);
    report.prefilter_global_degrees = global_degree_prefilter(g);

    auto replacements = feasible_replacements(g);
    for (const EdgeReplacement& rep : replacements) {
        ++(rep.trivial ? report.trivial_replacements : report.nontrivial_replacements);
    }
    PermGroup group = PermGroup::from_generators(generator_set(g, replacements), g.order());
    report.group_order = group.order();
    report.orbits = group.orbits();
    report.is_local = report.group_order == BigUint::factorial(g.order());
    report.is_global =
        report.prefilter_global_degrees &&
        is_local_amoeba(disjoint_union(g, Graph(1)), options.max_n);
    report.bounds = bounds_for(g, report.is_global);
    if (options.with_witnesses) {
        report.decrement = decrement_with_group(g, group);
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return report;
}

}  // namespace amoeba
