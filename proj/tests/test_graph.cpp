#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cospec/graph.hpp"
#include "oracles.hpp"

using namespace cospec;

TEST_CASE("friendship construction") {
    Graph f2 = friendship(2);
    REQUIRE(f2.order() == 5);
    REQUIRE(f2.edge_count() == 6);
    // edge set {01,02,12,03,04,34}
    REQUIRE(f2.has_edge(0, 1));
    REQUIRE(f2.has_edge(0, 2));
    REQUIRE(f2.has_edge(1, 2));
    REQUIRE(f2.has_edge(0, 3));
    REQUIRE(f2.has_edge(0, 4));
    REQUIRE(f2.has_edge(3, 4));
    REQUIRE_FALSE(f2.has_edge(1, 3));

    REQUIRE(friendship(1) == complete(3));
    REQUIRE(friendship(4).order() == 9);
    REQUIRE(friendship(4).edge_count() == 12);

    REQUIRE_THROWS_AS(friendship(0), std::invalid_argument);
    REQUIRE_THROWS_AS(friendship(32), std::invalid_argument);
}

TEST_CASE("friendship property: every pair has exactly one common neighbor") {
    for (int n : {1, 2, 3, 7, 31}) {
        Graph f = friendship(n);
        for (int u = 0; u < f.order(); ++u)
            for (int v = u + 1; v < f.order(); ++v)
                REQUIRE(std::popcount(f.neighbors(u) & f.neighbors(v)) == 1);
    }
}

TEST_CASE("cocktail party graphs") {
    Graph cp1 = cocktail_party(1);
    REQUIRE(cp1.order() == 2);
    REQUIRE(cp1.edge_count() == 0);

    REQUIRE(cocktail_party(2).edge_count() == 4);  // C4
    for (int v = 0; v < 4; ++v) REQUIRE(cocktail_party(2).degree(v) == 2);

    Graph cp3 = cocktail_party(3);
    REQUIRE(cp3.order() == 6);
    REQUIRE(cp3.edge_count() == 2 * 3 * 2);  // 2n(n-1)
    for (int v = 0; v < 6; ++v) REQUIRE(cp3.degree(v) == 4);
    REQUIRE_THROWS_AS(cocktail_party(0), std::invalid_argument);
}

TEST_CASE("cone constructions") {
    Graph two_k2 = disjoint_union(complete(2), complete(2));
    Graph c = cone(two_k2);
    REQUIRE(c.order() == 5);
    REQUIRE(c.edge_count() == 6);

    REQUIRE(cone(Graph(1)) == complete(2));

    Graph wheelish = cone(cycle(4));
    REQUIRE(wheelish.order() == 5);
    REQUIRE(wheelish.edge_count() == 8);
}

TEST_CASE("products of P2 and P3") {
    // the domino (two 4-cycles sharing an edge) is the cartesian product
    Graph dom = cartesian_product(path(2), path(3));
    REQUIRE(dom.order() == 6);
    REQUIRE(dom.edge_count() == 7);
    auto ds = degree_sequence(dom);
    REQUIRE(ds.count(2) == 4);
    REQUIRE(ds.count(3) == 2);
    // the tensor product of K2 with a bipartite graph splits into two copies
    Graph ten = kronecker_product(path(2), path(3));
    REQUIRE(ten.order() == 6);
    REQUIRE(ten.edge_count() == 4);
    REQUIRE(components(ten).size() == 2);
}

TEST_CASE("complement") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = oracle::random_graph(n, 0.4, rng);
        REQUIRE(complement(complement(g)) == g);
        REQUIRE(complement(g).edge_count() == n * (n - 1) / 2 - g.edge_count());
    }
    REQUIRE(complement(complete(3)).edge_count() == 0);
}

TEST_CASE("complement of CP(3) plus K1 is F3") {
    Graph g = complement(disjoint_union(cocktail_party(3), Graph(1)));
    Graph f3 = friendship(3);
    REQUIRE(g.order() == f3.order());
    REQUIRE(g.edge_count() == f3.edge_count());
    // vertex 6 is the center here
    REQUIRE(g.degree(6) == 6);
}

TEST_CASE("induced subgraphs") {
    Graph f2 = friendship(2);
    REQUIRE(induced_subgraph(f2, std::vector<int>{0, 1, 2}) == complete(3));
    REQUIRE(induced_subgraph(f2, f2.vertex_mask()) == f2);
    Graph leaves = induced_subgraph(star(4), std::vector<int>{1, 2, 3, 4});
    REQUIRE(leaves.edge_count() == 0);
    REQUIRE_THROWS_AS(induced_subgraph(f2, std::uint64_t{0}), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
    Graph g = disjoint_union(cycle(4), Graph(1));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0] == std::vector<int>{0, 1, 2, 3});
    REQUIRE(comps[1] == std::vector<int>{4});

    REQUIRE(is_connected(friendship(3)));

    Graph three_k2 = disjoint_union(disjoint_union(complete(2), complete(2)), complete(2));
    auto c3 = components(three_k2);
    REQUIRE(c3.size() == 3);
    for (const auto& c : c3) REQUIRE(c.size() == 2);
}

TEST_CASE("friendship minus center is n disjoint K2") {
    for (int n : {2, 5, 11}) {
        Graph g = remove_vertex(friendship(n), 0);
        auto comps = components(g);
        REQUIRE(int(comps.size()) == n);
        for (const auto& c : comps) REQUIRE(c.size() == 2);
        REQUIRE(g.edge_count() == n);
    }
}

TEST_CASE("degree sequence") {
    auto ds = degree_sequence(friendship(3));
    REQUIRE(ds.min() == 2);
    REQUIRE(ds.max() == 6);
    REQUIRE(ds.count(2) == 6);
    int sum = 0;
    for (int d : ds.degrees) sum += d;
    REQUIRE(sum % 2 == 0);
}

TEST_CASE("graph guards") {
    REQUIRE_THROWS_AS(Graph(0), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(65), std::invalid_argument);
    Graph g(3);
    REQUIRE_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
}
