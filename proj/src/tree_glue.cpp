#include <algorithm>
#include <numeric>
#include <string>

#include "clf/constructions.hpp"
#include "clf/errors.hpp"

namespace clf {

namespace {

void check_tree_params(int t, int k, int q) {
    if (t < 2) throw InvalidArgument("tree glue needs t >= 2");
    if (k < 2) throw InvalidArgument("tree glue needs k >= 2");
    // With q = 1 the root edges of different copies always coincide.
    if (q < 2) throw InvalidArgument("tree glue needs q >= 2");
}

struct Unions {
    explicit Unions(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<int> parent;
};

// One copy of G_q as an edge list; returns the local index of the first
// level-q vertex. Level i is built from level i-1 in order: for each parent,
// for each of the t-1 cliques, for each clique position.
std::vector<Edge> rooted_tree(int t, int k, int q, int& last_level_start, int& size) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < k; ++v) {
        edges.emplace_back(0, v);
        for (Vertex w = 1; w < v; ++w) edges.emplace_back(w, v);
    }
    int level_start = 1, level_end = k;
    for (int i = 2; i <= q; ++i) {
        int next = level_end;
        for (Vertex parent = level_start; parent < level_end; ++parent) {
            for (int c = 0; c < t - 1; ++c) {
                for (int a = 0; a < k - 1; ++a) {
                    edges.emplace_back(parent, next + a);
                    for (int b = 0; b < a; ++b) edges.emplace_back(next + b, next + a);
                }
                next += k - 1;
            }
        }
        level_start = level_end;
        level_end = next;
    }
    last_level_start = level_start;
    size = level_end;
    return edges;
}

// Cycle lengths strictly between lo and hi; lo may be 2 here.
VerificationReport range_report(const Graph& g, int lo, int hi) {
    if (lo >= 3) return verify_no_cycles_in_range(g, lo, hi);
    VerificationReport report;
    const auto cycle = find_cycle_in_range(g, lo + 1, hi - 1);
    report.add_check("no_cycles_in_range", !cycle,
                     cycle ? "cycle of length " + std::to_string(cycle->size()) + ": " +
                                 format_vertices(*cycle)
                           : std::string{});
    report.add_measure("range_lo", lo);
    report.add_measure("range_hi", hi);
    return report;
}

}  // namespace

std::int64_t level_size(int i, int k, int t) {
    if (i < 1) throw InvalidArgument("level index must be at least 1");
    constexpr std::int64_t limit = std::int64_t{1} << 31;
    std::int64_t m = k - 1;
    for (int j = 2; j <= i; ++j) {
        m *= static_cast<std::int64_t>(k - 1) * (t - 1);
        if (m > limit) throw SizeLimitExceeded("level size exceeds 2^31");
    }
    return m;
}

std::int64_t tree_glue_vertex_count(int t, int k, int q) {
    check_tree_params(t, k, q);
    std::int64_t per_copy = 1;
    for (int i = 1; i <= q; ++i) per_copy += level_size(i, k, t);
    return t * per_copy - (t - 1) * (1 + level_size(q, k, t));
}

Graph tree_glue(const TreeGlueParams& p) {
    check_tree_params(p.t, p.k, p.q);
    const auto m = level_size(p.q, p.k, p.t);
    if (p.family.m != m || static_cast<int>(p.family.size()) != p.t || !p.family.is_valid()) {
        throw InvalidArgument("tree glue needs " + std::to_string(p.t) +
                              " permutations of [" + std::to_string(m) + "]");
    }
    int last_start = 0, copy_size = 0;
    const auto local = rooted_tree(p.t, p.k, p.q, last_start, copy_size);
    if (static_cast<std::int64_t>(copy_size) * p.t > (std::int64_t{1} << 26)) {
        throw SizeLimitExceeded("tree glue graph too large");
    }

    Unions sets(copy_size * p.t);
    for (int c = 1; c < p.t; ++c) sets.unite(0, c * copy_size);
    // perms[i][j] is the level-q position glued in copy i for index j.
    for (int j = 0; j < m; ++j)
        for (int c = 1; c < p.t; ++c)
            sets.unite(last_start + p.family.perms[0][j], c * copy_size + last_start + p.family.perms[c][j]);

    std::vector<int> label(copy_size * p.t, -1);
    int next = 0;
    for (int v = 0; v < copy_size * p.t; ++v)
        if (sets.find(v) == v) label[v] = next++;

    GraphBuilder b(next);
    for (int c = 0; c < p.t; ++c) {
        for (auto [u, v] : local) {
            const int a = label[sets.find(c * copy_size + u)];
            const int z = label[sets.find(c * copy_size + v)];
            if (a == z) throw InvalidArgument("permutation family glues an edge into a loop");
            if (!b.add_edge(a, z)) {
                throw InvalidArgument("permutation family creates a parallel edge at " +
                                      std::to_string(std::min(a, z)) + "-" +
                                      std::to_string(std::max(a, z)));
            }
        }
    }
    Graph glued = std::move(b).build();
    // Three copies can still close a triangle through three different
    // cliques, which merges two link components.
    if (auto bad = first_link_mismatch(glued, complete_graph(p.k - 1), p.t)) {
        throw InvalidArgument("permutation family creates a triangle across copies at vertex " +
                              std::to_string(*bad));
    }
    return glued;
}

TreeGlueOutcome tree_glue_with_cycle_target(int t, int k, int q, int g, std::uint64_t seed,
                                            int max_rounds) {
    check_tree_params(t, k, q);
    if (g <= k) throw InvalidArgument("cycle target g must exceed k");
    TreeGlueOutcome out;
    if (g == k + 1) out.warnings.push_back("no cycle length lies strictly between k and g");

    const auto m = level_size(q, k, t);
    const auto floor_d = (m - 1) / (2 * t) - 1;  // largest d with m > 2(d+1)t
    std::int64_t d = t;
    try {
        d = std::max<std::int64_t>(level_size(g, k, t), t);
    } catch (const SizeLimitExceeded&) {
        d = floor_d;
    }
    if (d > floor_d) {
        out.warnings.push_back("separation distance " + std::to_string(d) + " clamped to " +
                               std::to_string(floor_d));
        d = floor_d;
    }

    constexpr int kAttemptsPerDistance = 4;
    std::uint64_t next_seed = seed;
    int attempts = 0;
    VerificationReport last;
    for (; d >= 1; d /= 2) {
        for (int a = 0; a < kAttemptsPerDistance; ++a, ++attempts) {
            const auto used_seed = next_seed++;
            auto fam = find_separating_permutations(static_cast<int>(m), static_cast<int>(d), t,
                                                    used_seed, max_rounds);
            if (!fam) continue;
            Graph glued;
            try {
                glued = tree_glue({t, k, q, *fam});
            } catch (const InvalidArgument&) {
                continue;
            }
            VerificationReport report = verify_constant_link(glued, complete_graph(k - 1), t);
            report.append(range_report(glued, k, g));
            last = report;
            if (!report.overall()) continue;
            report.add_measure("seed", static_cast<std::int64_t>(used_seed));
            report.add_measure("separation_d", d);
            report.add_measure("attempts", attempts + 1);
            report.add_measure("level_size", m);
            add_basic_measures(report, glued);
            out.report = std::move(report);
            out.graph = std::move(glued);
            out.family = std::move(fam);
            return out;
        }
    }
    out.report = last;
    out.report.add_check("certified", false,
                         "no certified graph after " + std::to_string(attempts) + " attempts");
    out.report.add_measure("seed", static_cast<std::int64_t>(seed));
    out.report.add_measure("attempts", attempts);
    out.report.add_measure("level_size", m);
    return out;
}

}  // namespace clf
