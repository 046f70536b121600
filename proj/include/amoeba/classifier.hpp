#ifndef AMOEBA_CLASSIFIER_HPP
#define AMOEBA_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amoeba/big_uint.hpp"
#include "amoeba/graph.hpp"
#include "amoeba/isomorphism.hpp"

namespace amoeba {

/// Default cap on the number of points a replacement group is built on.
/// Overridable per call; the CLI maps --max-n / AMOEBA_MAX_N onto it.
inline constexpr int kDefaultGroupCap = 14;

struct BoundCheck {
    long long value = 0;
    long long bound = 0;
    bool satisfied = false;
    bool tight = false;
};

/// Extremal bounds for global amoebas of minimum degree 1. Not applicable
/// otherwise (no such bounds hold in general). Clique/chromatic entries are
/// absent when the order exceeds the exact solver cap.
struct BoundReport {
    bool applicable = false;
    BoundCheck edge_count;
    std::optional<BoundCheck> clique;
    std::optional<BoundCheck> chromatic;
    BoundCheck max_degree;
};

struct DecrementCheck {
    bool holds = false;
    std::map<int, int> witnesses;  // x -> y with deg(y) = deg(x) - 1, 0-based
};

struct AmoebaReport {
    CanonicalForm graph_id;
    std::string graph6;
    int n = 0;
    int m = 0;
    std::vector<int> degree_sequence;
    bool is_local = false;
    bool is_global = false;
    BigUint group_order;
    std::vector<std::vector<int>> orbits;  // 0-based
    int trivial_replacements = 0;
    int nontrivial_replacements = 0;
    bool prefilter_local_degrees = false;
    bool prefilter_global_degrees = false;
    BoundReport bounds;
    std::optional<DecrementCheck> decrement;
    double elapsed_ms = 0.0;
};

struct ClassifyOptions {
    int max_n = kDefaultGroupCap;
    bool with_witnesses = false;
};

/// Necessary condition for local amoebas: every degree between the minimum
/// and the maximum occurs. Failure proves "not local".
bool local_degree_prefilter(const Graph& g);

/// Necessary condition for global amoebas: the degree value set is [Delta]
/// or {0} + [Delta], and the i-th largest degree is at most n+1-i. Failure
/// proves "not global".
bool global_degree_prefilter(const Graph& g);

/// True iff the replacement group is the full symmetric group of the order.
bool is_local_amoeba(const Graph& g, int max_n = kDefaultGroupCap);

/// True iff the graph with one extra isolated vertex is a local amoeba.
bool is_global_amoeba(const Graph& g, int max_n = kDefaultGroupCap);

/// Orbit criterion: each vertex of degree >= 2 has, in its orbit under the
/// replacement group, a vertex of one smaller degree. Agrees with
/// is_global_amoeba; kept as an independent validation route.
DecrementCheck degree_decrement_check(const Graph& g, int max_n = kDefaultGroupCap);

AmoebaReport classify(const Graph& g, const ClassifyOptions& options = {});

BoundReport verify_extremal_bounds(const Graph& g, int max_n = kDefaultGroupCap);

/// floor(sqrt(x)) for x >= 0, exact integer arithmetic.
long long integer_sqrt(long long x);

}  // namespace amoeba

#endif
