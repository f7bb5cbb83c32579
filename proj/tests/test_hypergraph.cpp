#include <doctest.h>

#include "clf/constructions.hpp"
#include "clf/correspondence.hpp"
#include "clf/designs.hpp"
#include "clf/errors.hpp"
#include "clf/hypergraph.hpp"
#include "support.hpp"

using namespace clf;

namespace {

Hypergraph cycle_hypergraph(int n) {
    std::vector<HyperEdge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return make_hypergraph(n, std::move(edges));
}

// Random 3-uniform hypergraph with m distinct edges.
Hypergraph random_triples(int n, int m, SplitMix64& rng) {
    std::set<HyperEdge> seen;
    while (static_cast<int>(seen.size()) < m) {
        HyperEdge e{static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)),
                    static_cast<Vertex>(rng.below(n))};
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) continue;
        seen.insert(e);
    }
    return make_hypergraph(n, {seen.begin(), seen.end()});
}

}  // namespace

TEST_SUITE("hypergraph") {

TEST_CASE("construction and validation") {
    const auto single = make_hypergraph(3, {{2, 0, 1}});
    CHECK(single.edge(0) == HyperEdge{0, 1, 2});
    CHECK_THROWS_AS(make_hypergraph(4, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(make_hypergraph(4, {{0}}), InvalidArgument);
    CHECK_THROWS_AS(make_hypergraph(4, {{0, 4}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_hypergraph(4, {{1, 1, 2}}), InvalidArgument);
    const auto f = fano().blocks;
    CHECK(f.vertex_count() == 7);
    CHECK(f.edge_count() == 7);
}

TEST_CASE("predicates") {
    const auto f = fano().blocks;
    CHECK(uniformity(f) == 3);
    CHECK(regularity(f) == 3);
    CHECK(is_linear(f));
    CHECK(is_connected(f));

    const auto single = make_hypergraph(3, {{0, 1, 2}});
    CHECK(uniformity(single) == 3);
    CHECK(regularity(single) == 1);
    CHECK(is_linear(single));

    const auto overlap = make_hypergraph(4, {{0, 1, 2}, {0, 1, 3}});
    CHECK_FALSE(is_linear(overlap));
    CHECK_FALSE(regularity(overlap).has_value());
}

TEST_CASE("incidence graphs") {
    const auto star = incidence_graph(make_hypergraph(3, {{0, 1, 2}}));
    CHECK(is_isomorphic(star, complete_bipartite_graph(1, 3)));

    const auto fi = incidence_graph(fano().blocks);
    CHECK(fi.vertex_count() == 14);
    CHECK(fi.min_degree() == 3);
    CHECK(fi.max_degree() == 3);
    CHECK(bipartition(fi).has_value());
    CHECK(shortest_cycle(fi)->size() == 6);

    CHECK(is_isomorphic(incidence_graph(cycle_hypergraph(4)), cycle_graph(8)));
}

TEST_CASE("Berge girth examples") {
    const auto fg = berge_girth(fano().blocks);
    CHECK(fg.girth == 3);
    REQUIRE(fg.witness);
    CHECK(is_berge_cycle(fano().blocks, *fg.witness));

    const auto overlap = make_hypergraph(4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(berge_girth(overlap).girth == 2);

    const auto tree = make_hypergraph(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(berge_girth(tree).is_finite());
    CHECK_FALSE(berge_girth(tree).witness.has_value());

    const auto h = contract_cliques(steiner_tower(3, 2), 3);
    CHECK(berge_girth(h).girth == 6);
}

TEST_CASE("Berge girth is half the incidence girth; linear iff girth >= 3") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng.below(6));
        const int m = 1 + static_cast<int>(rng.below(8));
        const auto h = random_triples(n, m, rng);
        const auto res = berge_girth(h);
        const auto inc = shortest_cycle(incidence_graph(h));
        CHECK(res.is_finite() == inc.has_value());
        if (inc) {
            CHECK(inc->size() % 2 == 0);
            CHECK(*res.girth * 2 == static_cast<int>(inc->size()));
            CHECK(is_berge_cycle(h, *res.witness));
        }
        CHECK(is_linear(h) == (!res.girth || *res.girth >= 3));
    }
}

TEST_CASE("removable edges") {
    const auto f = fano().blocks;
    const auto e = find_removable_edge(f);
    CHECK(testing::naive_connected(remove_edge(f, e)));
    CHECK(find_removable_edge(cycle_hypergraph(4)) == 0);
    const auto bowtie = make_hypergraph(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK_THROWS_AS(find_removable_edge(bowtie), InvalidArgument);
    const auto two = make_hypergraph(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK_THROWS_AS(find_removable_edge(two), InvalidArgument);

    // Every listed edge really is removable and every other edge is not.
    const auto adv = testing::adversarial_hypergraph();
    const auto removable = removable_edges(adv);
    for (std::size_t i = 0; i < adv.edge_count(); ++i) {
        const bool listed = std::find(removable.begin(), removable.end(), i) != removable.end();
        CHECK(listed == testing::naive_connected(remove_edge(adv, i)));
    }
}

TEST_CASE("switching preserves sizes, uniformity and degrees") {
    const auto f = fano().blocks;
    const auto s = contract_cliques(steiner_tower(3, 2), 3);
    for (int split = 1; split <= 2; ++split) {
        for (std::size_t e = 0; e < f.edge_count(); ++e) {
            const auto out = switch_edges(f, s, e, e % s.edge_count(), split);
            CHECK(out.vertex_count() == f.vertex_count() + s.vertex_count());
            CHECK(out.edge_count() == f.edge_count() + s.edge_count());
            CHECK(uniformity(out) == 3);
            for (Vertex v = 0; v < f.vertex_count(); ++v) CHECK(out.degree(v) == f.degree(v));
            for (Vertex v = 0; v < s.vertex_count(); ++v)
                CHECK(out.degree(v + f.vertex_count()) == s.degree(v));
        }
    }
    CHECK_THROWS_AS(switch_edges(f, f, 0, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(switch_edges(f, f, 0, 0, 3), InvalidArgument);
    CHECK_THROWS_AS(switch_edges(f, cycle_hypergraph(4), 0, 0, 1), InvalidArgument);
    CHECK_THROWS_AS(switch_edges(f, f, 7, 0, 1), IndexOutOfRange);
}

TEST_CASE("switched edges follow the stored-order split") {
    const auto a = make_hypergraph(3, {{0, 1, 2}});
    const auto b = make_hypergraph(3, {{0, 1, 2}});
    const auto out = switch_edges(a, b, 0, 0, 1);
    // e* = {0} + {4, 5}, f* = {1, 2} + {3}
    CHECK(out.edges() == std::vector<HyperEdge>{{0, 4, 5}, {1, 2, 3}});
}

TEST_CASE("switching with removable edges keeps connectivity and girth") {
    const auto f = fano().blocks;
    const auto s = contract_cliques(steiner_tower(3, 2), 3);
    const auto out = switch_edges(s, f, find_removable_edge(s), find_removable_edge(f), 1);
    CHECK(testing::naive_connected(out));
    CHECK(*berge_girth(out).girth >= 3);
}

TEST_CASE("an arbitrary switch can disconnect") {
    const auto h = testing::adversarial_hypergraph();
    CHECK(testing::naive_connected(h));
    CHECK(regularity(h) == 2);
    CHECK(uniformity(h) == 3);
    const auto bridge = static_cast<std::size_t>(
        std::find(h.edges().begin(), h.edges().end(), HyperEdge{7, 15, 23}) - h.edges().begin());
    const auto removable = removable_edges(h);
    CHECK(std::find(removable.begin(), removable.end(), bridge) == removable.end());
    const auto bad = switch_edges(h, h, bridge, bridge, 1);
    CHECK_FALSE(testing::naive_connected(bad));
    CHECK(components(bad).size() == 2);
    const auto good = switch_edges(h, h, find_removable_edge(h), find_removable_edge(h), 1);
    CHECK(testing::naive_connected(good));
}

TEST_CASE("chain switching") {
    const auto s = contract_cliques(steiner_tower(3, 2), 3);
    CHECK(chain_switch(s, 1) == s);
    for (int q = 2; q <= 3; ++q) {
        const auto c = chain_switch(s, q);
        CHECK(c.vertex_count() == 21 * q);
        CHECK(regularity(c) == 2);
        CHECK(uniformity(c) == 3);
        CHECK(testing::naive_connected(c));
        CHECK(*berge_girth(c).girth >= 6);
    }
    CHECK_THROWS_AS(chain_switch(s, 0), InvalidArgument);
}

}  // TEST_SUITE
