#include "amoeba/reports.hpp"

#include <json.hpp>

#include "amoeba/io.hpp"

namespace amoeba {

namespace {

using nlohmann::json;

json one_based(const std::vector<int>& points) {
    json out = json::array();
    for (int p : points) out.push_back(p + 1);
    return out;
}

json one_based(const std::vector<std::vector<int>>& blocks) {
    json out = json::array();
    for (const auto& block : blocks) out.push_back(one_based(block));
    return out;
}

json bound_check(const BoundCheck& check) {
    return {{"value", check.value},
            {"bound", check.bound},
            {"satisfied", check.satisfied},
            {"tight", check.tight}};
}

json bounds_json(const BoundReport& bounds) {
    json out{{"applicable", bounds.applicable}};
    if (bounds.applicable) {
        out["edges"] = bound_check(bounds.edge_count);
        if (bounds.clique) out["clique"] = bound_check(*bounds.clique);
        if (bounds.chromatic) out["chromatic"] = bound_check(*bounds.chromatic);
        out["max_degree"] = bound_check(bounds.max_degree);
    }
    return out;
}

}  // namespace

std::string report_to_json(const AmoebaReport& report) {
    json out{{"graph6", report.graph6},
             {"n", report.n},
             {"m", report.m},
             {"degree_sequence", report.degree_sequence},
             {"is_local", report.is_local},
             {"is_global", report.is_global},
             {"group_order", report.group_order.to_string()},
             {"orbits", one_based(report.orbits)},
             {"replacements",
              {{"trivial", report.trivial_replacements},
               {"nontrivial", report.nontrivial_replacements}}},
             {"prefilters",
              {{"local_degrees", report.prefilter_local_degrees},
               {"global_degrees", report.prefilter_global_degrees}}},
             {"bounds", bounds_json(report.bounds)},
             {"elapsed_ms", report.elapsed_ms}};
    if (report.decrement) {
        json witnesses = json::object();
        for (auto [x, y] : report.decrement->witnesses) {
            witnesses[std::to_string(x + 1)] = y + 1;
        }
        out["degree_decrement"] = {{"holds", report.decrement->holds},
                                   {"witnesses", witnesses}};
    }
    return out.dump();
}

std::string replacements_to_json(const Graph& g,
                                 const std::vector<EdgeReplacement>& replacements) {
    json items = json::array();
    int trivial = 0;
    for (const EdgeReplacement& rep : replacements) {
        if (rep.trivial) ++trivial;
        items.push_back({{"source", {rep.source.first + 1, rep.source.second + 1}},
                         {"target", {rep.target.first + 1, rep.target.second + 1}},
                         {"representative", rep.representative.cycle_string()},
                         {"trivial", rep.trivial}});
    }
    json out{{"graph6", to_graph6(g)},
             {"count", replacements.size()},
             {"trivial", trivial},
             {"nontrivial", replacements.size() - trivial},
             {"replacements", items}};
    return out.dump();
}

std::string group_to_json(const Graph& g, const PermGroup& group) {
    json gens = json::array();
    for (const Permutation& p : group.generators()) gens.push_back(p.cycle_string());
    json out{{"graph6", to_graph6(g)},
             {"degree", group.degree()},
             {"order", group.order().to_string()},
             {"is_symmetric", group.is_symmetric()},
             {"orbits", one_based(group.orbits())},
             {"base", one_based(group.base())},
             {"generators", gens}};
    return out.dump();
}

std::string bounds_to_json(const Graph& g, const BoundReport& bounds) {
    json out{{"graph6", to_graph6(g)},
             {"n", g.order()},
             {"m", g.size()},
             {"min_degree", g.min_degree()},
             {"max_degree", g.max_degree()},
             {"bounds", bounds_json(bounds)}};
    return out.dump();
}

std::string sweep_to_json_lines(const std::vector<SweepEntry>& entries) {
    std::string out;
    for (const SweepEntry& entry : entries) {
        json line{{"graph6", entry.graph6},
                  {"classifier",
                   {{"local", entry.classifier_local}, {"global", entry.classifier_global}}},
                  {"oracle", {{"local", entry.oracle_local}, {"global", entry.oracle_global}}},
                  {"match", entry.match()}};
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string oracle_to_json(const Graph& g, int host_order,
                           const std::vector<long long>& component_sizes,
                           bool classifier_local, bool classifier_global, bool oracle_local,
                           bool oracle_global) {
    long long copies = 0;
    for (long long size : component_sizes) copies += size;
    json out{{"graph6", to_graph6(g)},
             {"host_order", host_order},
             {"copies", copies},
             {"components", component_sizes.size()},
             {"component_sizes", component_sizes},
             {"reachable", component_sizes.size() == 1},
             {"classifier", {{"local", classifier_local}, {"global", classifier_global}}},
             {"oracle", {{"local", oracle_local}, {"global", oracle_global}}},
             {"match",
              classifier_local == oracle_local && classifier_global == oracle_global}};
    return out.dump();
}

}  // namespace amoeba
