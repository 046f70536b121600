#ifndef AMOEBA_ORACLE_HPP
#define AMOEBA_ORACLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"

namespace amoeba {

inline constexpr long long kDefaultOracleBudget = 5'000'000;

/// An edge subset of the host clique isomorphic to the pattern, packed as a
/// 128-bit mask over the host's edge slots (cap: host order 16).
using CopyState = std::array<uint64_t, 2>;

/// All edge subsets of K_host isomorphic to g with its isolated vertices
/// dropped. Count equals host!/((host-n')! |Aut(g')|). Throws CapError when
/// the copy count exceeds the budget.
std::vector<CopyState> enumerate_copies(const Graph& g, int host_order,
                                        long long budget = kDefaultOracleBudget);

/// Connected components of the graph on copies where two copies are adjacent
/// when one feasible replacement apart (remove one edge, add one host pair,
/// stay isomorphic). Component sizes, descending.
std::vector<long long> replacement_reachability(const Graph& g, int host_order,
                                                long long budget = kDefaultOracleBudget);

/// One component in K_n / K_{n+1} respectively.
bool oracle_is_local(const Graph& g, long long budget = kDefaultOracleBudget);
bool oracle_is_global(const Graph& g, long long budget = kDefaultOracleBudget);

/// Census entry: one isomorphism class with both verdict routes.
struct SweepEntry {
    std::string graph6;
    bool classifier_local = false;
    bool classifier_global = false;
    bool oracle_local = false;
    bool oracle_global = false;

    bool match() const {
        return classifier_local == oracle_local && classifier_global == oracle_global;
    }
};

/// All isomorphism classes on n vertices (one representative each, first in
/// labeled enumeration order), deduplicated by canonical form.
std::vector<Graph> all_graphs_up_to_isomorphism(int n);

/// Classifier vs oracle over every isomorphism class on n vertices.
/// The intended range is n <= 5 (n = 6 is allowed but slow); larger n throws.
std::vector<SweepEntry> sweep(int n, long long budget = kDefaultOracleBudget);

}  // namespace amoeba

#endif
