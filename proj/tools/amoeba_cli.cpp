// Command-line front end. All graph work happens behind the C API of the
// shared library; this file only parses arguments, moves text around, and
// formats output.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amoeba.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

int exit_code_for(amoeba_status status) {
    switch (status) {
        case AMOEBA_OK: return kExitOk;
        case AMOEBA_ERR_PARSE: return kExitParse;
        case AMOEBA_ERR_CAP: return kExitCap;
        case AMOEBA_ERR_MISMATCH: return kExitMismatch;
        default: return kExitError;
    }
}

[[noreturn]] void die(amoeba_status status) {
    std::cerr << "error: " << amoeba_status_name(status);
    std::string detail = amoeba_last_error();
    if (!detail.empty()) std::cerr << ": " << detail;
    std::cerr << '\n';
    std::exit(exit_code_for(status));
}

struct GraphHandle {
    amoeba_graph* ptr = nullptr;
    GraphHandle() = default;
    GraphHandle(GraphHandle&& other) noexcept : ptr(std::exchange(other.ptr, nullptr)) {}
    GraphHandle& operator=(GraphHandle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    ~GraphHandle() { amoeba_graph_free(ptr); }
};

std::string take_string(char* text) {
    std::string out = text ? text : "";
    amoeba_string_free(text);
    return out;
}

struct InputOptions {
    std::vector<std::string> expressions;
    std::vector<std::string> graph6;
    std::string graph6_file;
    std::string edge_list_file;

    void attach(CLI::App* cmd, bool multi) {
        cmd->add_option("expression", expressions,
                        multi ? "construction expressions"
                              : "construction expression, e.g. \"path(4)\"");
        cmd->add_option("--g6", graph6, "graph6 string");
        if (multi) {
            cmd->add_option("--g6-file", graph6_file, "file with one graph6 string per line");
        }
        cmd->add_option("--edge-list-file", edge_list_file,
                        "file in the plain edge-list format (\"n m\" header)");
    }

    // Labeled graphs in the order given; falls back to graph6 lines on stdin.
    std::vector<std::pair<std::string, GraphHandle>> load(bool allow_stdin) const {
        std::vector<std::pair<std::string, GraphHandle>> graphs;
        auto add = [&](const std::string& label, amoeba_status status, GraphHandle handle) {
            if (status != AMOEBA_OK) {
                std::cerr << "while reading " << label << ":\n";
                die(status);
            }
            graphs.emplace_back(label, std::move(handle));
        };
        for (const std::string& expr : expressions) {
            GraphHandle g;
            amoeba_status status = amoeba_graph_from_expression(expr.c_str(), &g.ptr);
            add(expr, status, std::move(g));
        }
        for (const std::string& text : graph6) {
            GraphHandle g;
            amoeba_status status = amoeba_graph_from_graph6(text.c_str(), &g.ptr);
            add(text, status, std::move(g));
        }
        if (!graph6_file.empty()) {
            std::ifstream in(graph6_file);
            if (!in) {
                std::cerr << "error: cannot open " << graph6_file << '\n';
                std::exit(kExitError);
            }
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                GraphHandle g;
                amoeba_status status = amoeba_graph_from_graph6(line.c_str(), &g.ptr);
                add(line, status, std::move(g));
            }
        }
        if (!edge_list_file.empty()) {
            std::ifstream in(edge_list_file);
            if (!in) {
                std::cerr << "error: cannot open " << edge_list_file << '\n';
                std::exit(kExitError);
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            GraphHandle g;
            amoeba_status status =
                amoeba_graph_from_edge_list_text(buffer.str().c_str(), &g.ptr);
            add(edge_list_file, status, std::move(g));
        }
        if (graphs.empty() && allow_stdin) {
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.empty()) continue;
                GraphHandle g;
                amoeba_status status = amoeba_graph_from_graph6(line.c_str(), &g.ptr);
                add(line, status, std::move(g));
            }
        }
        if (graphs.empty()) {
            std::cerr << "error: no input graphs\n";
            std::exit(kExitParse);
        }
        return graphs;
    }

    std::pair<std::string, GraphHandle> load_single() const {
        auto graphs = load(true);
        if (graphs.size() != 1) {
            std::cerr << "error: exactly one input graph expected\n";
            std::exit(kExitError);
        }
        return std::move(graphs.front());
    }
};

int default_cap() {
    if (const char* env = std::getenv("AMOEBA_MAX_N")) {
        int value = std::atoi(env);
        if (value > 0) return value;
    }
    return 0;  // library default
}

const char* yes_no(const json& value) { return value.get<bool>() ? "yes" : "no"; }

void print_human_report(const std::string& label, const json& r) {
    std::cout << label << ": n=" << r["n"] << " m=" << r["m"]
              << " local=" << yes_no(r["is_local"]) << " global=" << yes_no(r["is_global"])
              << " |S_G|=" << r["group_order"].get<std::string>()
              << " orbits=" << r["orbits"].size() << " replacements="
              << r["replacements"]["trivial"].get<int>() +
                     r["replacements"]["nontrivial"].get<int>()
              << '\n';
}

int run_classify(const InputOptions& input, int max_n, bool as_json, bool witnesses,
                 int jobs) {
    auto graphs = input.load(true);
    std::vector<std::string> outputs(graphs.size());
    std::vector<amoeba_status> statuses(graphs.size(), AMOEBA_OK);

    auto work = [&](size_t index) {
        char* out = nullptr;
        statuses[index] =
            amoeba_classify(graphs[index].second.ptr, max_n, witnesses ? 1 : 0, &out);
        outputs[index] = take_string(out);
    };
    if (jobs <= 1) {
        for (size_t i = 0; i < graphs.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (size_t i = next++; i < graphs.size(); i = next++) work(i);
            });
        }
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < graphs.size(); ++i) {
        if (statuses[i] != AMOEBA_OK) die(statuses[i]);
        if (as_json) {
            std::cout << outputs[i] << '\n';
        } else {
            print_human_report(graphs[i].first, json::parse(outputs[i]));
        }
    }
    return kExitOk;
}

int run_construct(const std::string& expression, const std::string& format) {
    GraphHandle g;
    amoeba_status status = amoeba_graph_from_expression(expression.c_str(), &g.ptr);
    if (status != AMOEBA_OK) die(status);
    if (format == "edge-list") {
        char* out = nullptr;
        status = amoeba_graph_to_edge_list_text(g.ptr, &out);
        if (status != AMOEBA_OK) die(status);
        std::cout << take_string(out);
        return kExitOk;
    }
    char* out = nullptr;
    status = amoeba_graph_to_graph6(g.ptr, &out);
    if (status != AMOEBA_OK) die(status);
    std::string g6 = take_string(out);
    if (format == "json") {
        json j{{"graph6", g6},
               {"n", amoeba_graph_order(g.ptr)},
               {"m", amoeba_graph_size(g.ptr)}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << g6 << '\n';
    }
    return kExitOk;
}

int run_replacements(const InputOptions& input, bool as_json) {
    auto [label, g] = input.load_single();
    char* out = nullptr;
    amoeba_status status = amoeba_replacements(g.ptr, &out);
    if (status != AMOEBA_OK) die(status);
    std::string text = take_string(out);
    if (as_json) {
        std::cout << text << '\n';
        return kExitOk;
    }
    json reps = json::parse(text);
    std::cout << label << ": " << reps["count"] << " feasible replacements ("
              << reps["trivial"] << " trivial, " << reps["nontrivial"] << " nontrivial)\n";
    for (const auto& item : reps["replacements"]) {
        std::cout << "  (" << item["source"][0] << "," << item["source"][1] << ") -> ("
                  << item["target"][0] << "," << item["target"][1] << ")  via "
                  << item["representative"].get<std::string>() << '\n';
    }
    return kExitOk;
}

int run_group(const InputOptions& input, int max_n, bool as_json) {
    auto [label, g] = input.load_single();
    char* out = nullptr;
    amoeba_status status = amoeba_group_info(g.ptr, max_n, &out);
    if (status != AMOEBA_OK) die(status);
    std::string text = take_string(out);
    if (as_json) {
        std::cout << text << '\n';
        return kExitOk;
    }
    json info = json::parse(text);
    std::cout << label << ": |S_G| = " << info["order"].get<std::string>()
              << (info["is_symmetric"].get<bool>() ? " (full symmetric group)" : "") << '\n';
    std::cout << "  orbits: " << info["orbits"].dump() << '\n';
    std::cout << "  generators (" << info["generators"].size() << "):";
    for (const auto& gen : info["generators"]) std::cout << ' ' << gen.get<std::string>();
    std::cout << '\n';
    return kExitOk;
}

int run_oracle(const InputOptions& input, int host_order, long long budget, int max_n,
               bool as_json) {
    auto [label, g] = input.load_single();
    char* out = nullptr;
    amoeba_status status = amoeba_oracle(g.ptr, host_order, budget, max_n, &out);
    if (status != AMOEBA_OK && status != AMOEBA_ERR_MISMATCH) die(status);
    std::string text = take_string(out);
    if (as_json) {
        std::cout << text << '\n';
    } else {
        json verdict = json::parse(text);
        std::cout << label << ": " << verdict["copies"] << " copies in K_"
                  << verdict["host_order"] << ", " << verdict["components"]
                  << " component(s)\n";
        std::cout << "  classifier: local=" << yes_no(verdict["classifier"]["local"])
                  << " global=" << yes_no(verdict["classifier"]["global"]) << '\n';
        std::cout << "  oracle:     local=" << yes_no(verdict["oracle"]["local"])
                  << " global=" << yes_no(verdict["oracle"]["global"]) << '\n';
        if (!verdict["match"].get<bool>()) std::cout << "  MISMATCH\n";
    }
    return exit_code_for(status);
}

int run_sweep(int n, long long budget, bool large, bool as_json) {
    if (n > 5 && !large) {
        std::cerr << "error: sweeping order " << n
                  << " walks a large copy space; pass --large to confirm\n";
        return kExitError;
    }
    char* out = nullptr;
    amoeba_status status = amoeba_sweep(n, budget, &out);
    if (status != AMOEBA_OK && status != AMOEBA_ERR_MISMATCH) die(status);
    std::string text = take_string(out);
    int classes = 0;
    int mismatches = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++classes;
        if (!json::parse(line)["match"].get<bool>()) ++mismatches;
    }
    if (as_json) {
        std::cout << text;
    } else {
        std::cout << classes << " classes, " << mismatches << " mismatches\n";
    }
    return exit_code_for(status);
}

int run_bounds(const InputOptions& input, int max_n, bool as_json) {
    auto [label, g] = input.load_single();
    char* out = nullptr;
    amoeba_status status = amoeba_bounds(g.ptr, max_n, &out);
    if (status != AMOEBA_OK) die(status);
    std::string text = take_string(out);
    if (as_json) {
        std::cout << text << '\n';
        return kExitOk;
    }
    json report = json::parse(text);
    const json& bounds = report["bounds"];
    std::cout << label << ": n=" << report["n"] << " m=" << report["m"] << '\n';
    if (!bounds["applicable"].get<bool>()) {
        std::cout << "  bounds not applicable (needs a global amoeba with min degree 1)\n";
        return kExitOk;
    }
    auto show = [](const char* name, const json& check) {
        std::cout << "  " << name << ": " << check["value"] << " <= " << check["bound"]
                  << (check["tight"].get<bool>() ? " (tight)" : "") << '\n';
    };
    show("edges", bounds["edges"]);
    if (bounds.contains("clique")) show("clique", bounds["clique"]);
    if (bounds.contains("chromatic")) show("chromatic", bounds["chromatic"]);
    show("max degree", bounds["max_degree"]);
    return kExitOk;
}

int run_probe(int max_n, int fib_max, bool as_json) {
    char* out = nullptr;
    amoeba_status status = amoeba_probe_conjecture(max_n, fib_max, &out);
    if (status != AMOEBA_OK && status != AMOEBA_ERR_MISMATCH) die(status);
    std::string text = take_string(out);
    if (as_json) {
        std::cout << text << '\n';
    } else {
        json probe = json::parse(text);
        std::cout << "edge-extremal global amoebas with min degree 1, up to order " << max_n
                  << ":\n";
        for (const auto& item : probe["extremal_global_amoebas"]) {
            std::cout << "  n=" << item["n"] << " " << item["graph6"].get<std::string>()
                      << " staircase=" << yes_no(item["isomorphic_to_h"]) << '\n';
        }
        std::cout << "all extremal graphs are staircase graphs: "
                  << yes_no(probe["all_isomorphic_to_h"]) << '\n';
        std::cout << "fibonacci trees:\n";
        for (const auto& item : probe["fibonacci_trees"]) {
            std::cout << "  T_" << item["index"] << " (order " << item["order"]
                      << "): local=" << yes_no(item["is_local"])
                      << " global=" << yes_no(item["is_global"]) << '\n';
        }
    }
    return status == AMOEBA_ERR_MISMATCH ? kExitMismatch : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph amoeba toolkit: edge-replacement groups, classification, "
                 "constructions, and a brute-force reachability oracle"};
    app.require_subcommand(1);

    bool as_json = false;
    int max_n = default_cap();
    bool witnesses = false;
    int jobs = 1;
    int host_order = 0;
    long long budget = 0;
    int sweep_n = 0;
    bool sweep_large = false;
    int probe_max_n = 6;
    int fib_max = 6;
    std::string construct_expr;
    std::string construct_format = "graph6";
    InputOptions classify_input, replacements_input, group_input, oracle_input, bounds_input;

    CLI::App* classify = app.add_subcommand("classify", "decide local/global amoeba status");
    classify_input.attach(classify, true);
    classify->add_flag("--json", as_json, "emit machine-readable JSON");
    classify->add_option("--max-n", max_n, "cap on group construction points");
    classify->add_flag("--witnesses", witnesses, "include degree-decrement witnesses");
    classify->add_option("--jobs", jobs, "worker threads for multi-graph input")
        ->check(CLI::Range(1, 64));

    CLI::App* construct = app.add_subcommand("construct", "build a graph from an expression");
    construct->add_option("expression", construct_expr, "construction expression")->required();
    construct->add_option("--format", construct_format, "graph6 | edge-list | json")
        ->check(CLI::IsMember({"graph6", "edge-list", "json"}));

    CLI::App* replacements =
        app.add_subcommand("replacements", "list the feasible edge-replacements");
    replacements_input.attach(replacements, false);
    replacements->add_flag("--json", as_json, "emit machine-readable JSON");

    CLI::App* group = app.add_subcommand("group", "inspect the edge-replacement group");
    group_input.attach(group, false);
    group->add_flag("--json", as_json, "emit machine-readable JSON");
    group->add_option("--max-n", max_n, "cap on group construction points");

    CLI::App* oracle =
        app.add_subcommand("oracle", "brute-force copy reachability versus the classifier");
    oracle_input.attach(oracle, false);
    oracle->add_flag("--json", as_json, "emit machine-readable JSON");
    oracle->add_option("--host-order", host_order, "order of the host complete graph");
    oracle->add_option("--budget", budget, "maximum number of copy states");
    oracle->add_option("--max-n", max_n, "cap on group construction points");

    CLI::App* sweep = app.add_subcommand(
        "sweep", "classifier-versus-oracle census over all classes of a given order");
    sweep->add_option("n", sweep_n, "number of vertices (1..6)")->required();
    sweep->add_flag("--json", as_json, "emit JSON lines, one class per line");
    sweep->add_flag("--large", sweep_large, "allow order 6 (a much larger copy space)");
    sweep->add_option("--budget", budget, "maximum number of copy states");

    CLI::App* bounds = app.add_subcommand("bounds", "extremal bound report");
    bounds_input.attach(bounds, false);
    bounds->add_flag("--json", as_json, "emit machine-readable JSON");
    bounds->add_option("--max-n", max_n, "cap on group construction points");

    CLI::App* probe = app.add_subcommand(
        "probe-conjecture", "census probe of edge-extremal global amoebas and fibonacci trees");
    probe->add_flag("--json", as_json, "emit machine-readable JSON");
    probe->add_option("--max-n", probe_max_n, "census orders to scan (2..6)");
    probe->add_option("--fib-max", fib_max, "largest fibonacci tree index to probe (1..7)");

    CLI11_PARSE(app, argc, argv);

    if (classify->parsed()) return run_classify(classify_input, max_n, as_json, witnesses, jobs);
    if (construct->parsed()) return run_construct(construct_expr, construct_format);
    if (replacements->parsed()) return run_replacements(replacements_input, as_json);
    if (group->parsed()) return run_group(group_input, max_n, as_json);
    if (oracle->parsed()) return run_oracle(oracle_input, host_order, budget, max_n, as_json);
    if (sweep->parsed()) return run_sweep(sweep_n, budget, sweep_large, as_json);
    if (bounds->parsed()) return run_bounds(bounds_input, max_n, as_json);
    if (probe->parsed()) return run_probe(probe_max_n, fib_max, as_json);
    return kExitError;
}
