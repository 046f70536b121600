#include "amoeba.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "amoeba/classifier.hpp"
#include "amoeba/constructions.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/expression.hpp"
#include "amoeba/graph.hpp"
#include "amoeba/io.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/replacements.hpp"
#include "amoeba/reports.hpp"

struct amoeba_graph_s {
    amoeba::Graph graph;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
amoeba_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const amoeba::ParseError& e) {
        g_last_error = e.what();
        return AMOEBA_ERR_PARSE;
    } catch (const amoeba::CapError& e) {
        g_last_error = e.what();
        return AMOEBA_ERR_CAP;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return AMOEBA_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AMOEBA_ERR_INTERNAL;
    }
}

amoeba_status make_graph(amoeba::Graph graph, amoeba_graph** out) {
    *out = new amoeba_graph_s{std::move(graph)};
    return AMOEBA_OK;
}

int effective_cap(int max_n) {
    return max_n > 0 ? max_n : amoeba::kDefaultGroupCap;
}

long long effective_budget(long long budget) {
    return budget > 0 ? budget : amoeba::kDefaultOracleBudget;
}

}  // namespace

extern "C" {

const char* amoeba_version(void) { return "1.0.0"; }

const char* amoeba_status_name(amoeba_status status) {
    switch (status) {
        case AMOEBA_OK: return "ok";
        case AMOEBA_ERR_INVALID: return "invalid argument";
        case AMOEBA_ERR_PARSE: return "parse error";
        case AMOEBA_ERR_CAP: return "cap exceeded";
        case AMOEBA_ERR_MISMATCH: return "classifier/oracle mismatch";
        case AMOEBA_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* amoeba_last_error(void) { return g_last_error.c_str(); }

amoeba_status amoeba_graph_from_graph6(const char* text, amoeba_graph** out) {
    if (!text || !out) return AMOEBA_ERR_INVALID;
    return guarded([&] { return make_graph(amoeba::from_graph6(text), out); });
}

amoeba_status amoeba_graph_from_edge_list(int n, const int* endpoints, int m,
                                          amoeba_graph** out) {
    if (!out || (m > 0 && !endpoints)) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        std::vector<amoeba::Edge> pairs;
        pairs.reserve(m);
        for (int i = 0; i < m; ++i) pairs.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
        return make_graph(amoeba::Graph::from_edge_list_1based(n, pairs), out);
    });
}

amoeba_status amoeba_graph_from_edge_list_text(const char* text, amoeba_graph** out) {
    if (!text || !out) return AMOEBA_ERR_INVALID;
    return guarded([&] { return make_graph(amoeba::from_edge_list_text(text), out); });
}

amoeba_status amoeba_graph_from_expression(const char* expression, amoeba_graph** out) {
    if (!expression || !out) return AMOEBA_ERR_INVALID;
    return guarded([&] { return make_graph(amoeba::parse_construction(expression), out); });
}

void amoeba_graph_free(amoeba_graph* graph) { delete graph; }

int amoeba_graph_order(const amoeba_graph* graph) {
    return graph ? graph->graph.order() : -1;
}

int amoeba_graph_size(const amoeba_graph* graph) {
    return graph ? graph->graph.size() : -1;
}

amoeba_status amoeba_graph_to_graph6(const amoeba_graph* graph, char** out) {
    if (!graph || !out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        *out = dup_string(amoeba::to_graph6(graph->graph));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_graph_to_edge_list_text(const amoeba_graph* graph, char** out) {
    if (!graph || !out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        *out = dup_string(amoeba::to_edge_list_text(graph->graph));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_classify(const amoeba_graph* graph, int max_n, int with_witnesses,
                              char** json_out) {
    if (!graph || !json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        amoeba::ClassifyOptions options;
        options.max_n = effective_cap(max_n);
        options.with_witnesses = with_witnesses != 0;
        *json_out = dup_string(amoeba::report_to_json(amoeba::classify(graph->graph, options)));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_replacements(const amoeba_graph* graph, char** json_out) {
    if (!graph || !json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        auto replacements = amoeba::feasible_replacements(graph->graph);
        *json_out = dup_string(amoeba::replacements_to_json(graph->graph, replacements));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_group_info(const amoeba_graph* graph, int max_n, char** json_out) {
    if (!graph || !json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        if (graph->graph.order() > effective_cap(max_n)) {
            throw amoeba::CapError("group construction capped at " +
                                   std::to_string(effective_cap(max_n)) + " points");
        }
        *json_out = dup_string(
            amoeba::group_to_json(graph->graph, amoeba::amoeba_group(graph->graph)));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_bounds(const amoeba_graph* graph, int max_n, char** json_out) {
    if (!graph || !json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        auto bounds = amoeba::verify_extremal_bounds(graph->graph, effective_cap(max_n));
        *json_out = dup_string(amoeba::bounds_to_json(graph->graph, bounds));
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_oracle(const amoeba_graph* graph, int host_order, long long budget,
                            int max_n, char** json_out) {
    if (!graph || !json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        const amoeba::Graph& g = graph->graph;
        int host = host_order > 0 ? host_order : g.order();
        long long limit = effective_budget(budget);
        auto components = amoeba::replacement_reachability(g, host, limit);
        bool classifier_local = amoeba::is_local_amoeba(g, effective_cap(max_n));
        bool classifier_global = amoeba::is_global_amoeba(g, effective_cap(max_n));
        bool oracle_local = amoeba::oracle_is_local(g, limit);
        bool oracle_global = amoeba::oracle_is_global(g, limit);
        *json_out = dup_string(amoeba::oracle_to_json(g, host, components, classifier_local,
                                                      classifier_global, oracle_local,
                                                      oracle_global));
        if (classifier_local != oracle_local || classifier_global != oracle_global) {
            g_last_error = "classifier and oracle verdicts disagree";
            return AMOEBA_ERR_MISMATCH;
        }
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_sweep(int n, long long budget, char** json_lines_out) {
    if (!json_lines_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        auto entries = amoeba::sweep(n, effective_budget(budget));
        *json_lines_out = dup_string(amoeba::sweep_to_json_lines(entries));
        for (const auto& entry : entries) {
            if (!entry.match()) {
                g_last_error = "classifier and oracle verdicts disagree on " + entry.graph6;
                return AMOEBA_ERR_MISMATCH;
            }
        }
        return AMOEBA_OK;
    });
}

amoeba_status amoeba_probe_conjecture(int max_n, int fib_max_index, char** json_out) {
    if (!json_out) return AMOEBA_ERR_INVALID;
    return guarded([&] {
        using nlohmann::json;
        if (max_n < 2 || max_n > 6) {
            throw amoeba::CapError("conjecture probe supports orders 2 to 6");
        }
        if (fib_max_index < 1 || fib_max_index > 7) {
            throw amoeba::CapError("fibonacci probe supports indices 1 to 7");
        }
        bool consistent = true;
        json extremal = json::array();
        for (int n = 2; n <= max_n; ++n) {
            const long long edge_target = static_cast<long long>(n) * n / 4;
            amoeba::CanonicalForm h_key = amoeba::canonical_form(amoeba::h_graph(n));
            for (const amoeba::Graph& g : amoeba::all_graphs_up_to_isomorphism(n)) {
                if (g.min_degree() != 1 || g.size() != edge_target) continue;
                if (!amoeba::is_global_amoeba(g)) continue;
                bool is_h = amoeba::canonical_form(g) == h_key;
                extremal.push_back({{"n", n},
                                    {"graph6", amoeba::to_graph6(g)},
                                    {"edges", g.size()},
                                    {"isomorphic_to_h", is_h}});
                // the independent orbit route must agree the graph is global
                if (!amoeba::degree_decrement_check(g).holds) consistent = false;
            }
        }
        bool all_h = true;
        for (const auto& item : extremal) {
            if (!item.at("isomorphic_to_h").get<bool>()) all_h = false;
        }
        json fib = json::array();
        for (int i = 1; i <= fib_max_index; ++i) {
            amoeba::RootedGraph t = amoeba::fibonacci_tree(i);
            int cap = t.graph.order() + 1;
            bool local = amoeba::is_local_amoeba(t.graph, cap);
            bool global = amoeba::is_global_amoeba(t.graph, cap);
            if (!global) consistent = false;  // known to hold for every index
            fib.push_back({{"index", i},
                           {"order", t.graph.order()},
                           {"max_degree", t.graph.max_degree()},
                           {"is_local", local},
                           {"is_global", global}});
        }
        json out{{"max_n", max_n},
                 {"extremal_global_amoebas", extremal},
                 {"all_isomorphic_to_h", all_h},
                 {"fibonacci_trees", fib},
                 {"consistent", consistent}};
        *json_out = dup_string(out.dump());
        if (!consistent) {
            g_last_error = "probe found an internal inconsistency";
            return AMOEBA_ERR_MISMATCH;
        }
        return AMOEBA_OK;
    });
}

void amoeba_string_free(char* text) { std::free(text); }

}  // extern "C"
