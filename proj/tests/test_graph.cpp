#include <doctest.h>

#include <vector>

#include "clf/errors.hpp"
#include "clf/graph.hpp"
#include "support.hpp"

using namespace clf;

TEST_SUITE("graph") {

TEST_CASE("make_graph builds canonical graphs and rejects bad input") {
    const std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
    const auto k3 = make_graph(3, tri);
    CHECK(k3.edge_count() == 3);
    CHECK(k3 == complete_graph(3));

    const auto empty = make_graph(2, std::vector<Edge>{});
    CHECK(empty.edge_count() == 0);
    CHECK(empty.min_degree() == 0);

    const std::vector<Edge> dup{{0, 1}, {1, 2}, {1, 0}};
    CHECK_THROWS_AS(make_graph(7, dup), InvalidArgument);
    const std::vector<Edge> loop{{2, 2}};
    CHECK_THROWS_AS(make_graph(3, loop), InvalidArgument);
    const std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(make_graph(3, far), IndexOutOfRange);
}

TEST_CASE("neighbor lists are sorted and symmetric; degrees sum to twice the edges") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testing::random_graph(12, 0.3, rng);
        std::size_t total = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (Vertex w : nb) {
                CHECK(w != v);
                CHECK(g.has_edge(w, v));
            }
            total += nb.size();
        }
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("links of cliques and cycles") {
    for (int k = 2; k <= 10; ++k)
        for (Vertex v = 0; v < k; ++v) CHECK(link_of(complete_graph(k), v) == complete_graph(k - 1));
    for (Vertex v = 0; v < 5; ++v) {
        const auto l = link_of(cycle_graph(5), v);
        CHECK(l.vertex_count() == 2);
        CHECK(l.edge_count() == 0);
    }
    CHECK_THROWS(link_of(cycle_graph(5), 5));
}

TEST_CASE("induced subgraphs relabel in index order") {
    const auto c6 = cycle_graph(6);
    const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
    CHECK(induced_subgraph(c6, all) == c6);
    const std::vector<Vertex> pair{0, 1};
    CHECK(induced_subgraph(complete_graph(4), pair) == complete_graph(2));
    const std::vector<Vertex> seg{0, 1, 2};
    CHECK(induced_subgraph(c6, seg) == path_graph(3));
    const std::vector<Vertex> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(c6, bad), IndexOutOfRange);
}

TEST_CASE("isomorphism examples") {
    CHECK(is_isomorphic(cycle_graph(4), complete_bipartite_graph(2, 2)));
    CHECK_FALSE(is_isomorphic(complete_graph(3), path_graph(3)));
    CHECK_FALSE(is_isomorphic(disjoint_copies(complete_graph(2), 2), path_graph(4)));
}

TEST_CASE("isomorphism agrees with permutation search on random small graphs") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const auto a = testing::random_graph(n, 0.5, rng);
        // Half the time compare against a relabeled copy, otherwise a fresh graph
        // with the same edge count when one turns up.
        const auto b = trial % 2 ? testing::relabel(a, testing::random_permutation(n, rng))
                                 : testing::random_graph(n, 0.5, rng);
        CHECK(is_isomorphic(a, b) == testing::naive_isomorphic(a, b));
    }
}

TEST_CASE("isomorphism is an equivalence on a random corpus and respects fingerprints") {
    SplitMix64 rng(21);
    std::vector<Graph> corpus;
    for (int i = 0; i < 30; ++i) {
        const auto g = testing::random_graph(8, 0.4, rng);
        corpus.push_back(g);
        corpus.push_back(testing::relabel(g, testing::random_permutation(8, rng)));
    }
    auto degrees = [](const Graph& g) {
        std::vector<int> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(is_isomorphic(corpus[i], corpus[i]));
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            const bool ij = is_isomorphic(corpus[i], corpus[j]);
            CHECK(ij == is_isomorphic(corpus[j], corpus[i]));
            if (ij) {
                CHECK(degrees(corpus[i]) == degrees(corpus[j]));
                CHECK(testing::triangle_count(corpus[i]) == testing::triangle_count(corpus[j]));
                for (std::size_t l = 0; l < corpus.size(); l += 7)
                    if (is_isomorphic(corpus[j], corpus[l])) CHECK(is_isomorphic(corpus[i], corpus[l]));
            }
        }
    }
}

TEST_CASE("components") {
    const auto two = components(disjoint_copies(complete_graph(2), 2));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<Vertex>{0, 1});
    CHECK(two[1] == std::vector<Vertex>{2, 3});
    CHECK(components(complete_graph(5)).size() == 1);
    const std::vector<Graph> parts{complete_graph(3), complete_graph(1)};
    const auto mixed = components(disjoint_union(parts));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].size() == 3);
    CHECK(mixed[1].size() == 1);
}

TEST_CASE("circumference and independence number on small graphs") {
    CHECK(circumference_small(complete_graph(4)) == 4);
    CHECK_FALSE(circumference_small(path_graph(5)).has_value());
    CHECK(circumference_small(complete_graph(5)) == 5);
    CHECK_THROWS_AS(circumference_small(cycle_graph(17)), SizeLimitExceeded);

    CHECK(independence_number(disjoint_copies(complete_graph(2), 2)) == 2);
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK_THROWS_AS(independence_number(cycle_graph(33)), SizeLimitExceeded);

    SplitMix64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = testing::random_graph(1 + static_cast<int>(rng.below(9)), 0.35, rng);
        CHECK(independence_number(g) == testing::naive_independence(g));
        const auto lengths = testing::naive_cycle_lengths(g);
        const auto c = circumference_small(g);
        if (lengths.empty()) {
            CHECK_FALSE(c.has_value());
        } else {
            CHECK(c == *lengths.rbegin());
        }
    }
}

TEST_CASE("cartesian products") {
    const std::vector<Graph> k3k3{complete_graph(3), complete_graph(3)};
    const auto p = cartesian_product(k3k3);
    CHECK(p.vertex_count() == 9);
    CHECK(p.min_degree() == 4);
    CHECK(p.max_degree() == 4);
    const auto two_k2 = disjoint_copies(complete_graph(2), 2);
    for (Vertex v = 0; v < 9; ++v) CHECK(is_isomorphic(link_of(p, v), two_k2));
    CHECK(cycle_lengths_up_to(p, 4).contains(4));

    const std::vector<Graph> k2k2{complete_graph(2), complete_graph(2)};
    CHECK(is_isomorphic(cartesian_product(k2k2), cycle_graph(4)));

    const std::vector<Graph> one{complete_graph(3)};
    CHECK_THROWS_AS(cartesian_product(one), InvalidArgument);
    const std::vector<Graph> with_empty{complete_graph(3), Graph{}};
    CHECK_THROWS_AS(cartesian_product(with_empty), InvalidArgument);
}

TEST_CASE("product links are the union of factor links") {
    // Factors with known constant links: K_n (K_{n-1}), C_n (2K_1), K_3□K_3 (2K_2).
    const std::vector<Graph> k3k3{complete_graph(3), complete_graph(3)};
    const std::vector<std::pair<Graph, Graph>> factors{
        {complete_graph(3), complete_graph(2)},
        {complete_graph(4), complete_graph(3)},
        {cycle_graph(5), disjoint_copies(complete_graph(1), 2)},
        {cycle_graph(6), disjoint_copies(complete_graph(1), 2)},
        {cartesian_product(k3k3), disjoint_copies(complete_graph(2), 2)},
    };
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const std::vector<Graph> pair{factors[i].first, factors[j].first};
            const auto p = cartesian_product(pair);
            const std::vector<Graph> links{factors[i].second, factors[j].second};
            const auto expected = disjoint_union(links);
            for (Vertex v = 0; v < p.vertex_count(); v += 3)
                CHECK(is_isomorphic(link_of(p, v), expected));
        }
    }
}

TEST_CASE("join_over") {
    const std::vector<Vertex> root{0};
    CHECK(join_over(complete_graph(1), root, complete_graph(2)) == complete_graph(3));
    // One step of the tree construction: K_3 rooted at 0, W_1 = {1, 2}.
    const std::vector<Vertex> w1{1, 2};
    const auto g2 = join_over(complete_graph(3), w1, complete_graph(2));
    CHECK(g2.vertex_count() == 3 + 4);
    CHECK(g2.edge_count() == 3 + 2 * 3);
    CHECK(g2.has_edge(1, 3));
    CHECK(g2.has_edge(1, 4));
    CHECK(g2.has_edge(2, 5));
    CHECK(g2.has_edge(2, 6));
    const std::vector<Vertex> none;
    CHECK(join_over(cycle_graph(5), none, complete_graph(2)) == cycle_graph(5));
    const std::vector<Vertex> bad{7};
    CHECK_THROWS_AS(join_over(complete_graph(3), bad, complete_graph(2)), IndexOutOfRange);
}

TEST_CASE("C_{k,j} canonical members") {
    CHECK(c_k_j_graph(5, 0) == cycle_graph(5));
    const auto c52 = c_k_j_graph(5, 2);
    CHECK(c52.vertex_count() == 5);
    CHECK(c52.edge_count() == 7);
    CHECK(c52.degree(0) == 4);
    const std::vector<Edge> k4_minus{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(is_isomorphic(c_k_j_graph(4, 1), make_graph(4, k4_minus)));
    CHECK_THROWS_AS(c_k_j_graph(5, 3), InvalidArgument);
    CHECK_THROWS_AS(c_k_j_graph(2, 0), InvalidArgument);
}

TEST_CASE("bipartition") {
    CHECK(bipartition(cycle_graph(6)).has_value());
    CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
    const auto sides = bipartition(complete_bipartite_graph(2, 3));
    REQUIRE(sides);
    CHECK((*sides)[0] == 0);
    CHECK((*sides)[2] == 1);
}

}  // TEST_SUITE
