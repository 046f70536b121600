#include <doctest.h>

#include "amoeba/classifier.hpp"
#include "amoeba/constructions.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/expression.hpp"
#include "amoeba/isomorphism.hpp"
#include "amoeba/replacements.hpp"

using namespace amoeba;

TEST_CASE("staircase graphs") {
    Graph h5 = h_graph(5);
    CHECK(h5.size() == 6);
    CHECK(h5.degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});
    CHECK(h_graph(2) == path(2));
    for (int n = 3; n <= 8; ++n) {
        CHECK(h_graph(n).size() == n * n / 4);
        CHECK(is_isomorphic(complement(disjoint_union(h_graph(n - 1), Graph(1))), h_graph(n)));
    }
    CHECK_THROWS_AS(h_graph(1), std::invalid_argument);
}

TEST_CASE("staircase with a pendant") {
    Graph g9 = g_graph(9);
    CHECK(g9.order() == 9);
    CHECK(g9.size() == h_graph(8).size() + 1);
    CHECK(g9.degree(8) == 1);
    CHECK(g9.adjacent(7, 8));
    CHECK_THROWS_AS(g_graph(7), std::invalid_argument);
    CHECK_THROWS_AS(g_graph(10), std::invalid_argument);
}

TEST_CASE("five-cycle with a diametrical chord") {
    Graph g = c5_plus();
    CHECK(g.order() == 5);
    CHECK(g.size() == 6);
    CHECK(g.degree_sequence() == std::vector<int>{3, 3, 2, 2, 2});
    CHECK(g.adjacent(0, 3));
}

TEST_CASE("fibonacci trees") {
    const int expected_order[] = {0, 2, 2, 4, 6, 10, 16, 26};
    for (int i = 1; i <= 7; ++i) {
        RootedGraph t = fibonacci_tree(i);
        CHECK(t.graph.order() == expected_order[i]);
        CHECK(t.graph.size() == t.graph.order() - 1);
        CHECK(t.graph.is_connected());
        if (i >= 2) CHECK(t.graph.max_degree() == i - 1);
        CHECK(t.graph.degree(t.root) == t.graph.max_degree());
    }
    CHECK(is_isomorphic(fibonacci_tree(3).graph, path(4)));
    CHECK_THROWS_AS(fibonacci_tree(0), std::invalid_argument);
}

TEST_CASE("expansion gluing") {
    RootedGraph h(star(4).with_edge_added(2, 3), 2);  // K_{1,3} plus an edge, degree-2 root
    Expansion e = expand(path(5), {1, 2}, h);
    CHECK(e.graph.order() == 11);
    CHECK(e.glue_points == std::vector<int>{1, 2});
    REQUIRE(e.copy_blocks.size() == 2);
    CHECK(e.copy_blocks[0] == std::vector<int>{5, 6, 7});
    CHECK(e.copy_blocks[1] == std::vector<int>{8, 9, 10});

    // each copy block together with its glue point carries a copy of h
    for (size_t j = 0; j < e.copy_blocks.size(); ++j) {
        std::vector<int> image(h.graph.order());
        int pos = 0;
        for (int v = 0; v < h.graph.order(); ++v) {
            image[v] = (v == h.root) ? e.glue_points[j] : e.copy_blocks[j][pos++];
        }
        for (auto [u, v] : h.graph.edges()) CHECK(e.graph.adjacent(image[u], image[v]));
    }

    CHECK(expand(path(5), {}, h).graph == path(5));
    Expansion single = expand(Graph(1), {0}, RootedGraph(path(2), 0));
    CHECK(single.graph == path(2));
    CHECK_THROWS_AS(expand(path(3), {5}, h), std::invalid_argument);
}

TEST_CASE("subgraph permutations extend by the identity") {
    Permutation sigma = Permutation::from_cycles("(2 3)", 6);
    std::vector<int> j_prime{0, 1, 2, 3, 4, 5};
    std::vector<int> j_second{3, 4, 5, 6, 7, 8};
    Permutation lifted = lift_subgraph_perm(sigma, j_prime, j_second, 9);
    CHECK(lifted.cycle_string() == "(2 3)");
    CHECK(lifted.degree() == 9);

    CHECK(lift_subgraph_perm(Permutation::identity(6), j_prime, j_second, 9).is_identity());
    CHECK_THROWS_AS(
        lift_subgraph_perm(Permutation::from_cycles("(4 5)", 6), j_prime, j_second, 9),
        std::invalid_argument);
}

TEST_CASE("lifted subgraph permutations realize replacements of the whole graph") {
    // triangle with a pendant at vertex 3, glued to a path 4-5-6-7 at vertex 3
    Graph left = Graph::from_edge_list_1based(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
    Graph whole = Graph::from_edge_list_1based(
        7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    // sliding the pendant, 34 -> 14, is feasible in the left part and fixes
    // the shared vertex 4; sigma = (1 3) realizes it
    Permutation sigma = Permutation::from_cycles("(1 3)", 4);
    CHECK(apply_permutation(left, sigma) ==
          left.with_edge_removed(2, 3).with_edge_added(0, 3));
    Permutation lifted =
        lift_subgraph_perm(sigma, {0, 1, 2, 3}, {3, 4, 5, 6}, 7);
    CHECK(apply_permutation(whole, lifted) ==
          whole.with_edge_removed(2, 3).with_edge_added(0, 3));
    CHECK(amoeba_group(whole).contains(lifted));
}

TEST_CASE("expansion permutations move copy blocks with their glue points") {
    RootedGraph h(star(4).with_edge_added(2, 3), 2);
    Expansion e = expand(path(5), {1, 2}, h);
    Permutation sigma = Permutation::from_cycles("(1 4)(2 3)", 5);
    Permutation lifted = lift_expansion_perm(sigma, e);
    CHECK(lifted.cycle_string() == "(1 4)(2 3)(6 9)(7 10)(8 11)");
    CHECK(is_isomorphic(apply_permutation(e.graph, lifted), e.graph));
    CHECK(amoeba_group(e.graph).contains(lifted));

    CHECK_THROWS_AS(lift_expansion_perm(Permutation::from_cycles("(2 4)", 5), e),
                    std::invalid_argument);
    CHECK_THROWS_AS(lift_expansion_perm(Permutation::identity(4), e), std::invalid_argument);
}

TEST_CASE("union with a copy of a part, edge added or removed") {
    Graph p3 = path(3);
    Graph plus = union_copy_plus_edge(p3, {0, 1, 2}, {0, 2});
    CHECK(is_isomorphic(plus, disjoint_union(path(3), cycle(3))));

    Graph base = disjoint_union(cycle(3), Graph(1));
    Graph minus = union_copy_minus_edge(base, {0, 1, 2}, {0, 1});
    CHECK(minus.order() == 7);
    CHECK(is_isomorphic(minus, disjoint_union(base, path(3))));

    CHECK_THROWS_AS(union_copy_plus_edge(p3, {0, 1, 2}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(union_copy_minus_edge(p3, {0, 1, 2}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(union_copy_plus_edge(p3, {0, 1}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(union_copy_plus_edge(base, {0, 1, 3}, {0, 1}), std::invalid_argument);
}

TEST_CASE("edge-by-edge build-up unions") {
    CHECK(embed_as_component(Graph(1)) == Graph(1));

    Graph stages_p3 = embed_as_component(path(3));
    auto comps = stages_p3.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].size() == 1);
    CHECK(comps[1].size() == 2);
    CHECK(comps[2].size() == 3);

    Graph stages_k4 = embed_as_component(complete(4));
    auto k4_comps = stages_k4.components();
    REQUIRE(k4_comps.size() == 7);  // one per edge count 0..6
    std::vector<size_t> sizes;
    for (const auto& c : k4_comps) sizes.push_back(c.size());
    CHECK(sizes == std::vector<size_t>{1, 2, 3, 4, 4, 4, 4});
    CHECK(stages_k4.size() == 0 + 1 + 2 + 3 + 4 + 5 + 6);

    CHECK_THROWS_AS(embed_as_component(disjoint_union(path(2), path(2))),
                    std::invalid_argument);
}

TEST_CASE("remaining named families") {
    CHECK(tadpole(3).order() == 4);
    CHECK(tadpole(3).size() == 4);
    CHECK(star(4).degree_sequence() == std::vector<int>{3, 1, 1, 1});
    CHECK(complete_minus_matching(5, 2).degree_sequence() ==
          std::vector<int>{4, 3, 3, 3, 3});
    CHECK_THROWS_AS(complete_minus_matching(3, 2), std::invalid_argument);
    Graph forest = star_forest(3);
    CHECK(forest.order() == 7);
    CHECK(forest.size() == 5);
    CHECK(forest.max_degree() == 3);
    CHECK(add_isolates(path(2), 2).order() == 4);
}

TEST_CASE("construction expressions") {
    CHECK(is_isomorphic(parse_construction("union(path(4), plus_edge(copy(path(4)), 1, 4))"),
                        disjoint_union(path(4), cycle(4))));
    CHECK(parse_construction("expand(path(5), {2, 3}, rooted(plus_edge(star(4), 3, 4), 3))")
              .order() == 11);
    CHECK(parse_construction("h(6)") == h_graph(6));
    CHECK(parse_construction("complement(complete(4))") == Graph(4));
    CHECK(parse_construction("edgeless(3)") == Graph(3));
    CHECK(parse_construction(" union( path(2) , path(2) , path(2) ) ").order() == 6);
    CHECK(parse_construction("minus_edge(cycle(4), 1, 2)").size() == 3);
    CHECK(parse_construction("add_isolates(g(9), 1)").order() == 10);
    CHECK(parse_construction("embed_component(path(3))").order() == 6);
    CHECK(parse_construction("fib(4)").order() == 6);
    CHECK(parse_construction("expand(path(3), {2}, fib(3))").order() == 6);

    CHECK_THROWS_AS(parse_construction("path(0)"), ParseError);
    CHECK_THROWS_AS(parse_construction("g(7)"), ParseError);
    CHECK_THROWS_AS(parse_construction("widget(3)"), ParseError);
    CHECK_THROWS_AS(parse_construction("path(3) extra"), ParseError);
    CHECK_THROWS_AS(parse_construction("union(path(2)"), ParseError);
    CHECK_THROWS_AS(parse_construction("plus_edge(path(2), 1, 2)"), ParseError);

    std::vector<std::string> warnings;
    parse_construction("complete_minus_matching(4, 2)", &warnings);
    CHECK(warnings.size() == 1);
    warnings.clear();
    parse_construction("complete_minus_matching(5, 2)", &warnings);
    CHECK(warnings.empty());
}
