#include <doctest.h>

#include <random>
#include <set>

#include "amoeba/constructions.hpp"
#include "amoeba/io.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/replacements.hpp"
#include "oracles.hpp"

using namespace amoeba;

namespace {

std::set<std::pair<Edge, Edge>> label_pairs(const std::vector<EdgeReplacement>& reps) {
    std::set<std::pair<Edge, Edge>> out;
    for (const EdgeReplacement& rep : reps) out.insert({rep.source, rep.target});
    return out;
}

std::pair<Edge, Edge> labels_1based(int r, int s, int k, int l) {
    return {{r - 1, s - 1}, {k - 1, l - 1}};
}

// every sigma with apply_permutation(g, sigma) == g - source + target
std::set<Permutation> brute_coset(const Graph& g, Edge source, Edge target) {
    Graph replaced = g.with_edge_removed(source.first, source.second)
                         .with_edge_added(target.first, target.second);
    std::set<Permutation> out;
    for (const Permutation& sigma : testing::all_permutations(g.order())) {
        if (apply_permutation(g, sigma) == replaced) out.insert(sigma);
    }
    return out;
}

std::set<std::pair<Edge, Edge>> brute_feasible(const Graph& g) {
    std::set<std::pair<Edge, Edge>> out;
    for (Edge e : g.edges()) {
        out.insert({e, e});
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v)) continue;
                Graph candidate =
                    g.with_edge_removed(e.first, e.second).with_edge_added(u, v);
                if (testing::brute_is_isomorphic(g, candidate)) out.insert({e, Edge{u, v}});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("feasible replacements of the path on four vertices") {
    auto reps = feasible_replacements(path(4));
    CHECK(reps.size() == 8);
    std::set<std::pair<Edge, Edge>> expected{
        labels_1based(1, 2, 1, 2), labels_1based(2, 3, 2, 3), labels_1based(3, 4, 3, 4),
        labels_1based(1, 2, 1, 4), labels_1based(2, 3, 1, 3), labels_1based(2, 3, 2, 4),
        labels_1based(2, 3, 1, 4), labels_1based(3, 4, 1, 4)};
    CHECK(label_pairs(reps) == expected);
    for (const EdgeReplacement& rep : reps) {
        Graph replaced = path(4)
                             .with_edge_removed(rep.source.first, rep.source.second)
                             .with_edge_added(rep.target.first, rep.target.second);
        CHECK(apply_permutation(path(4), rep.representative) == replaced);
        CHECK(rep.trivial == (rep.source == rep.target));
    }
}

TEST_CASE("regular graphs admit only trivial replacements") {
    auto c4 = feasible_replacements(cycle(4));
    CHECK(c4.size() == 4);
    for (const auto& rep : c4) CHECK(rep.trivial);
    CHECK(label_pairs(c4) == brute_feasible(cycle(4)));

    auto k5 = feasible_replacements(complete(5));
    CHECK(k5.size() == 10);
    for (const auto& rep : k5) CHECK(rep.trivial);

    CHECK(feasible_replacements(Graph(4)).empty());
}

TEST_CASE("replacement enumeration matches brute force on small graphs") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_graph(rng, 5, 0.5);
        CHECK(label_pairs(feasible_replacements(g)) == brute_feasible(g));
    }
}

TEST_CASE("the coset of a replacement is the automorphism set times one element") {
    Graph p4 = path(4);
    EdgeReplacement rep{{0, 1}, {0, 3}, Permutation::from_cycles("(2 4)", 4), false};
    auto coset = replacement_coset(p4, rep);
    std::set<std::string> cycles;
    for (const Permutation& p : coset) cycles.insert(p.cycle_string());
    CHECK(cycles == std::set<std::string>{"(2 4)", "(1 4 3 2)"});

    EdgeReplacement bogus{{0, 1}, {0, 2}, Permutation::identity(4), false};
    CHECK_THROWS_AS(replacement_coset(p4, bogus), std::invalid_argument);
}

TEST_CASE("cosets match brute force on every small graph") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& [key, members] : testing::brute_iso_classes(n)) {
            const Graph& g = members.front();
            auto autos = testing::brute_isomorphisms(g, g);
            for (const EdgeReplacement& rep : feasible_replacements(g)) {
                auto coset = replacement_coset(g, rep);
                auto expected = brute_coset(g, rep.source, rep.target);
                CHECK(coset.size() == expected.size());
                CHECK(coset.size() == autos.size());
                CHECK(std::set<Permutation>(coset.begin(), coset.end()) == expected);
            }
        }
    }
}

TEST_CASE("trivial coset of an asymmetric graph is the identity alone") {
    // find the first graph on 6 vertices with a trivial automorphism set and an edge
    for (const Graph& g : all_graphs_up_to_isomorphism(6)) {
        if (g.size() == 0 || automorphisms(g).size() != 1) continue;
        auto reps = feasible_replacements(g);
        REQUIRE(reps.front().trivial);
        auto coset = replacement_coset(g, reps.front());
        CHECK(coset == std::vector<Permutation>{Permutation::identity(6)});
        return;
    }
    FAIL("no asymmetric graph found on 6 vertices");
}

TEST_CASE("nontrivial replacements of the complement are the reversed replacements") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& [key, members] : testing::brute_iso_classes(n)) {
            const Graph& g = members.front();
            Graph gc = complement(g);
            auto reps_c = label_pairs(feasible_replacements(gc));
            size_t nontrivial_c = 0;
            for (const auto& [source, target] : reps_c) {
                if (source != target) ++nontrivial_c;
            }
            size_t nontrivial = 0;
            for (const EdgeReplacement& rep : feasible_replacements(g)) {
                if (rep.trivial) continue;  // e -> e does not transfer: e is no edge of gc
                ++nontrivial;
                CHECK(reps_c.count({rep.target, rep.source}) == 1);
                auto coset = replacement_coset(g, rep);
                auto reversed = brute_coset(gc, rep.target, rep.source);
                CHECK(std::set<Permutation>(coset.begin(), coset.end()) == reversed);
            }
            CHECK(nontrivial == nontrivial_c);
        }
    }
}

TEST_CASE("degree bookkeeping under a replacement") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testing::random_graph(rng, 6, 0.5);
        auto reps = feasible_replacements(g);
        const EdgeReplacement& rep = reps[rng() % reps.size()];
        auto coset = replacement_coset(g, rep);
        const Permutation& sigma = coset[rng() % coset.size()];
        Permutation rho = testing::random_permutation(rng, 6);
        Graph before = apply_permutation(g, rho);
        Graph after = apply_permutation(g, compose(sigma, rho));
        auto [r, s] = rep.source;
        auto [k, l] = rep.target;
        // the rule tracks labels: physical vertex i carries label rho(i) in
        // the copy under rho
        for (int i = 0; i < 6; ++i) {
            int label = rho(i);
            int want = before.degree(i);
            bool removed = (label == r || label == s) && !(label == k || label == l);
            bool added = (label == k || label == l) && !(label == r || label == s);
            if (removed) --want;
            if (added) ++want;
            CHECK(after.degree(i) == want);
        }
    }
}

TEST_CASE("the reduced generator set generates the full replacement group") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& [key, members] : testing::brute_iso_classes(n)) {
            const Graph& g = members.front();
            std::vector<Permutation> full = testing::brute_isomorphisms(g, g);
            for (const EdgeReplacement& rep : feasible_replacements(g)) {
                auto coset = replacement_coset(g, rep);
                full.insert(full.end(), coset.begin(), coset.end());
            }
            auto expected = testing::brute_closure(full, n);
            PermGroup group = amoeba_group(g);
            CHECK(group.order() == BigUint(expected.size()));
            for (const Permutation& p : expected) CHECK(group.contains(p));
        }
    }
}

TEST_CASE("replacements of a union contain the replacements of its parts") {
    auto contains_all = [](const Graph& whole, const Graph& part) {
        auto big = label_pairs(feasible_replacements(whole));
        for (auto& [source, target] : label_pairs(feasible_replacements(part))) {
            CHECK(big.count({source, target}) == 1);
        }
    };
    contains_all(disjoint_union(path(3), path(4)), path(3));
    contains_all(disjoint_union(path(2), cycle(3)), path(2));
}

TEST_CASE("replacement group orders of named graphs") {
    CHECK(amoeba_group(path(4)).order() == BigUint(24));
    CHECK(amoeba_group(cycle(4)).order() == BigUint(8));
    CHECK(amoeba_group(cycle(5)).order() == BigUint(10));
    CHECK(amoeba_group(Graph(6)).order() == BigUint::factorial(6));
}

TEST_CASE("point stabilizers of replacement groups act as stated") {
    // the chord graph: the stabilizer of the off-chord vertex moves the rest
    PermGroup chord = amoeba_group(c5_plus());
    CHECK(chord.stabilizer(4).is_transitive_on({0, 1, 2, 3}));

    RootedGraph t5 = fibonacci_tree(5);
    PermGroup group = amoeba_group(t5.graph);
    std::vector<int> rest;
    for (int v = 0; v < 10; ++v) {
        if (v != t5.root) rest.push_back(v);
    }
    CHECK(group.stabilizer(t5.root).is_transitive_on(rest));
}

TEST_CASE("component groups embed into the replacement group of the union") {
    PermGroup part = amoeba_group(path(3));
    CHECK(part.order() == BigUint(6));
    PermGroup product = direct_product_embed(part.embedded(6, 0), part.embedded(6, 3));
    CHECK(product.order() == BigUint(36));
    PermGroup whole = amoeba_group(disjoint_union(path(3), path(3)));
    for (const Permutation& g : product.generators()) CHECK(whole.contains(g));
}

TEST_CASE("the replacement group of the complement is the same group") {
    for (const auto& [key, members] : testing::brute_iso_classes(4)) {
        const Graph& g = members.front();
        PermGroup a = amoeba_group(g);
        PermGroup b = amoeba_group(complement(g));
        CHECK(a.order() == b.order());
        for (const Permutation& p : a.generators()) CHECK(b.contains(p));
        for (const Permutation& p : b.generators()) CHECK(a.contains(p));
    }
}
