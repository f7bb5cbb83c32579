#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "clf/constructions.hpp"
#include "clf/errors.hpp"
#include "clf/turan.hpp"
#include "clf/verification.hpp"
#include "support.hpp"

using namespace clf;

namespace {

// Test-local brute force: every labeled graph, links checked with the naive
// independence oracle, the pattern found by trying all injections.
bool naive_contains(const Graph& host, const Graph& pattern) {
    const int n = host.vertex_count();
    const int p = pattern.vertex_count();
    if (p > n) return false;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto pe = pattern.edges();
    do {
        if (std::all_of(pe.begin(), pe.end(), [&](Edge e) { return host.has_edge(order[e.first], order[e.second]); }))
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

int naive_turind(const TuranInstance& inst) {
    const int n = inst.n;
    const int pairs = n * (n - 1) / 2;
    const Graph pattern = inst.pattern();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const int e = __builtin_popcountll(mask);
        if (e <= best) continue;
        const Graph g = testing::graph_from_mask(n, mask);
        bool star = false;
        for (Vertex v = 0; v < n && !star; ++v) star = testing::naive_independence(link_of(g, v)) >= inst.t;
        if (star || naive_contains(g, pattern)) continue;
        best = e;
    }
    return best;
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("report text") {
    VerificationReport r;
    r.add_check("a", true);
    r.add_check("b", false, "witness 1 2");
    r.add_measure("vertices", 21);
    CHECK_FALSE(r.overall());
    CHECK(r.to_text() ==
          "check a = pass\ncheck b = fail: witness 1 2\nmeasure vertices = 21\noverall = fail\n");
    CHECK(r.measure("vertices") == 21);
    CHECK_FALSE(r.measure("edges"));
    REQUIRE(r.find_check("b"));
    CHECK(r.find_check("b")->detail == "witness 1 2");
    CHECK(VerificationReport{}.overall());
    CHECK(VerificationReport{}.to_text() == "overall = pass\n");
}

TEST_CASE("constant link") {
    const Graph s2 = steiner_tower(3, 2);
    CHECK(verify_constant_link(s2, complete_graph(2), 2).overall());
    CHECK_FALSE(verify_constant_link(s2, complete_graph(2), 3).overall());
    CHECK(verify_constant_link(cycle_graph(7), Graph(1), 2).overall());
    const auto bad = verify_constant_link(complete_graph(4), complete_graph(2), 1);
    CHECK_FALSE(bad.overall());
    CHECK(bad.find_check("constant_link")->detail.find("vertex 0") == 0);
    CHECK(common_link(complete_graph(5)) == complete_graph(4));
    CHECK_FALSE(common_link(path_graph(3)));
}

TEST_CASE("cycle ranges") {
    const Graph s2 = steiner_tower(3, 2);
    CHECK(verify_no_cycles_in_range(s2, 3, 6).overall());
    const auto r = verify_no_cycles_in_range(s2, 3, 7);
    CHECK_FALSE(r.overall());
    CHECK(r.find_check("no_cycles_in_range")->detail.rfind("cycle of length 6", 0) == 0);
    CHECK(verify_no_cycles_in_range(cycle_graph(9), 3, 9).overall());
    CHECK_THROWS_AS(verify_no_cycles_in_range(s2, 2, 5), InvalidArgument);
    CHECK_THROWS_AS(verify_no_cycles_in_range(s2, 5, 5), InvalidArgument);
}

TEST_CASE("induced stars") {
    CHECK(verify_induced_star_free(steiner_tower(3, 2), 3).overall());
    CHECK_FALSE(verify_induced_star_free(steiner_tower(3, 2), 2).overall());
    const auto star = verify_induced_star_free(complete_bipartite_graph(1, 3), 3);
    CHECK_FALSE(star.overall());
    CHECK(star.find_check("induced_star_free")->detail == "induced K_1,3 center 0 leaves 1 2 3");
    CHECK(verify_induced_star_free(complete_graph(6), 2).overall());
    CHECK_FALSE(verify_induced_star_free(complete_bipartite_graph(1, 40), 50).overall());
}

TEST_CASE("extremal cycle instances") {
    for (int q : {1, 2, 3}) {
        CAPTURE(q);
        const Graph g = steiner_tower(3, 2, q);
        // Replace the tower by disjoint copies of the depth-2 graph.
        const Graph copies = disjoint_copies(steiner_tower(3, 2), q);
        for (const Graph& h : {g, copies}) {
            const auto r = verify_extremal_cycle_instance(h, 4, 3);
            CHECK(r.overall());
            CHECK(r.measure("turan_bound") == 2 * h.vertex_count());
        }
    }
    const auto r = verify_extremal_cycle_instance(steiner_tower(3, 2), 4, 3);
    CHECK(r.measure("edges") == 42);
    CHECK(r.measure("turan_bound") == 42);
    const auto k5 = verify_extremal_cycle_instance(complete_graph(5), 4, 3);
    CHECK_FALSE(k5.overall());
    CHECK_FALSE(k5.find_check("c_k_free")->passed);
    CHECK_THROWS_AS(verify_extremal_cycle_instance(complete_graph(5), 4, 2), InvalidArgument);
}

TEST_CASE("closed-form bounds") {
    CHECK(turan_upper_bound(TuranInstance::cycle(4, 3, 21)) == Rational{42, 1});
    CHECK(turan_upper_bound(TuranInstance::cycle(3, 2, 6)) == Rational{3, 1});
    CHECK(turan_upper_bound(TuranInstance::cycle(5, 2, 5)).to_string() == "15/2");
    CHECK(turan_upper_bound(TuranInstance::matching(2, 2, 10)) == Rational{8, 1});
    CHECK(turan_upper_bound(TuranInstance::cycle_with_chords(5, 2, 3, 4)) == Rational{12, 1});
    CHECK(witness_lower_bound(TuranInstance::cycle(4, 2, 7)) == 3);
    CHECK(witness_lower_bound(TuranInstance::matching(3, 2, 9)) == 10);
    CHECK(Rational::make(6, -4) == Rational{-3, 2});
}

TEST_CASE("witnesses") {
    const Graph m = witness_matching(7);
    CHECK(m.vertex_count() == 7);
    CHECK(m.edge_count() == 3);
    CHECK(m.max_degree() == 1);
    const Graph c = witness_clique_plus_isolates(3, 8);
    CHECK(c.vertex_count() == 8);
    CHECK(c.edge_count() == 10);
    CHECK_FALSE(naive_contains(c, TuranInstance::matching(3, 2, 8).pattern()));
    CHECK(testing::naive_independence(link_of(c, 0)) == 1);
}

TEST_CASE("instance parsing") {
    CHECK(TuranInstance::parse("C4", 3, 5).kind == Forbidden::Cycle);
    CHECK(TuranInstance::parse("2K2", 3, 5).s == 2);
    const auto ckj = TuranInstance::parse("C5+2", 3, 5);
    CHECK(ckj.kind == Forbidden::CycleWithChords);
    CHECK(ckj.j == 2);
    CHECK(ckj.forbidden_name() == "C5+2");
    CHECK(ckj.pattern() == c_k_j_graph(5, 2));
    for (const char* bad : {"", "C", "K2", "Cx", "C5+", "C5+3", "C2", "0K2", "P4"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(TuranInstance::parse(bad, 3, 5), InvalidArgument);
    }
    CHECK_THROWS_AS(TuranInstance::cycle(4, 1, 5), InvalidArgument);
}

TEST_CASE("brute force matches frozen values") {
    struct Row {
        const char* forbidden;
        int t;
        std::vector<int> values;
    };
    // Produced by tests/oracles/turind_oracle.py.
    const std::vector<Row> rows = {
        {"C3", 2, {0, 1, 1, 2, 2, 3, 3}},
        {"C4", 2, {0, 1, 3, 3, 4, 6, 6}},
        {"2K2", 2, {0, 1, 3, 3, 3, 3, 3}},
        {"2K2", 3, {0, 1, 3, 3, 3, 3, 3}},
    };
    for (const auto& row : rows) {
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(row.forbidden);
            CAPTURE(n);
            CHECK(brute_force_turind(TuranInstance::parse(row.forbidden, row.t, n)) == row.values[n - 1]);
        }
    }
    CHECK_THROWS_AS(brute_force_turind(TuranInstance::cycle(4, 2, 8)), SizeLimitExceeded);
}

TEST_CASE("brute force agrees with a naive enumeration") {
    for (const char* f : {"C3", "C4", "C5", "2K2", "C4+1", "C5+2"}) {
        for (int t : {2, 3}) {
            for (int n = 1; n <= 5; ++n) {
                CAPTURE(f);
                CAPTURE(t);
                CAPTURE(n);
                const auto inst = TuranInstance::parse(f, t, n);
                CHECK(brute_force_turind(inst) == naive_turind(inst));
            }
        }
    }
}

TEST_CASE("brute force lies between witness and bound") {
    for (const char* f : {"C3", "C4", "C5", "2K2", "3K2", "C4+1"}) {
        for (int t : {2, 3, 4}) {
            int previous = 0;
            for (int n = 1; n <= 7; ++n) {
                CAPTURE(f);
                CAPTURE(t);
                CAPTURE(n);
                const auto inst = TuranInstance::parse(f, t, n);
                const int value = brute_force_turind(inst);
                CHECK(value >= previous);
                previous = value;
                const auto bound = turan_upper_bound(inst);
                CHECK(value * bound.den <= bound.num);
                if (inst.kind != Forbidden::Matching || n >= 2 * inst.s - 1)
                    CHECK(value >= witness_lower_bound(inst));
            }
        }
    }
}

}  // TEST_SUITE
