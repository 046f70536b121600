#ifndef AMOEBA_REPORTS_HPP
#define AMOEBA_REPORTS_HPP

#include <string>
#include <vector>

#include "amoeba/classifier.hpp"
#include "amoeba/graph.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/perm_group.hpp"
#include "amoeba/replacements.hpp"

namespace amoeba {

// JSON text for the machine-readable CLI/API surface. All vertex indices in
// emitted JSON are 1-based; group orders are decimal strings.

std::string report_to_json(const AmoebaReport& report);
std::string replacements_to_json(const Graph& g,
                                 const std::vector<EdgeReplacement>& replacements);
std::string group_to_json(const Graph& g, const PermGroup& group);
std::string bounds_to_json(const Graph& g, const BoundReport& bounds);
std::string sweep_to_json_lines(const std::vector<SweepEntry>& entries);
std::string oracle_to_json(const Graph& g, int host_order,
                           const std::vector<long long>& component_sizes,
                           bool classifier_local, bool classifier_global, bool oracle_local,
                           bool oracle_global);

}  // namespace amoeba

#endif
