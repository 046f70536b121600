#ifndef AMOEBA_COLORING_HPP
#define AMOEBA_COLORING_HPP

#include "amoeba/graph.hpp"

namespace amoeba {

inline constexpr int kExactSolverCap = 16;

/// Exact clique number via branch and bound. Throws CapError above the cap.
int clique_number(const Graph& g, int max_order = kExactSolverCap);

/// Exact chromatic number: backtracking feasibility from the clique lower
/// bound upward. Throws CapError above the cap.
int chromatic_number(const Graph& g, int max_order = kExactSolverCap);

}  // namespace amoeba

#endif
