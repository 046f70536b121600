#include <doctest.h>

#include <random>

#include "amoeba/constructions.hpp"
#include "amoeba/graph.hpp"
#include "amoeba/isomorphism.hpp"
#include "oracles.hpp"

using namespace amoeba;

TEST_CASE("edge list construction and validation") {
    Graph p4 = Graph::from_edge_list_1based(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(p4.order() == 4);
    CHECK(p4.size() == 3);
    CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

    Graph empty = Graph::from_edge_list_1based(3, {});
    CHECK(empty.size() == 0);

    CHECK_THROWS_AS(Graph::from_edge_list_1based(4, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list_1based(4, {{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list_1based(4, {{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list_1based(4, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
}

TEST_CASE("labeled copies follow the inverse-image rule") {
    Graph p4 = path(4);
    Graph moved = apply_permutation(p4, Permutation::from_cycles("(2 4)", 4));
    CHECK(moved == Graph::from_edge_list_1based(4, {{2, 3}, {3, 4}, {1, 4}}));

    CHECK(apply_permutation(p4, Permutation::identity(4)) == p4);
    CHECK(apply_permutation(p4, Permutation::from_cycles("(1 4)(2 3)", 4)) == p4);
    CHECK_THROWS_AS(apply_permutation(p4, Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("copies compose through permutation composition") {
    Graph p4 = path(4);
    Permutation sigma = Permutation::from_cycles("(2 4)", 4);
    Permutation rho = Permutation::from_cycles("(2 3)", 4);
    Graph direct = apply_permutation(p4, compose(sigma, rho));
    CHECK(direct == apply_permutation(apply_permutation(p4, sigma), rho));
    CHECK(direct == Graph::from_edge_list_1based(4, {{1, 4}, {2, 4}, {2, 3}}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testing::random_graph(rng, 7, 0.45);
        Permutation a = testing::random_permutation(rng, 7);
        Permutation b = testing::random_permutation(rng, 7);
        CHECK(apply_permutation(apply_permutation(g, a), b) ==
              apply_permutation(g, compose(a, b)));
        CHECK(is_isomorphic(apply_permutation(g, a), g));
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete(4)).size() == 0);
    CHECK(is_isomorphic(complement(cycle(5)), cycle(5)));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_graph(rng, 6, 0.5);
        CHECK(complement(complement(g)) == g);
        Permutation sigma = testing::random_permutation(rng, 6);
        CHECK(complement(apply_permutation(g, sigma)) ==
              apply_permutation(complement(g), sigma));
    }
}

TEST_CASE("disjoint union reindexes the second part") {
    Graph two_edges = disjoint_union(path(2), path(2));
    CHECK(two_edges.order() == 4);
    CHECK(two_edges.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

    Graph with_isolate = disjoint_union(path(3), Graph(1));
    CHECK(with_isolate.order() == 4);
    CHECK(with_isolate.size() == 2);

    Graph mixed = disjoint_union(path(3), cycle(3));
    CHECK(mixed.order() == 6);
    CHECK(mixed.size() == 5);
}

TEST_CASE("degree sequences") {
    CHECK(complete(4).degree_sequence() == std::vector<int>{3, 3, 3, 3});
    CHECK(h_graph(5).degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});
    CHECK(g_graph(9).degree_sequence() == std::vector<int>{7, 6, 5, 5, 4, 3, 2, 1, 1});
}

TEST_CASE("chromatic bound from the degree sequence") {
    CHECK(welsh_powell_bound(complete(4)) == 4);
    CHECK(welsh_powell_bound(Graph(5)) == 1);
    CHECK(welsh_powell_bound(h_graph(6)) == 4);
    CHECK(h_graph(6).degree_sequence() == std::vector<int>{5, 4, 3, 3, 2, 1});
}

TEST_CASE("connectivity and components") {
    CHECK(path(5).is_connected());
    CHECK_FALSE(disjoint_union(path(2), path(3)).is_connected());
    auto comps = disjoint_union(path(2), cycle(3)).components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3, 4});
}
