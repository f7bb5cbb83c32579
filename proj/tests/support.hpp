#pragma once

// Naive reference implementations used as oracles by the tests. None of
// them calls the library's cycle, isomorphism or independence code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "clf/graph.hpp"
#include "clf/hypergraph.hpp"
#include "clf/rng.hpp"

namespace clf::testing {

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

// Lengths of all cycles, via Hamiltonian-path DP anchored at the minimum
// vertex of each vertex subset. Small graphs only.
inline std::set<int> naive_cycle_lengths(const Graph& g) {
    const int n = g.vertex_count();
    const auto a = adjacency_matrix(g);
    std::set<int> lengths;
    const std::uint32_t full = 1u << n;
    // reach[mask][v]: a path from lowest(mask) through exactly mask ends at v.
    std::vector<std::vector<char>> reach(full, std::vector<char>(n, 0));
    for (int s = 0; s < n; ++s) reach[1u << s][s] = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        int low = 0;
        while (!(mask >> low & 1)) ++low;
        for (int v = 0; v < n; ++v) {
            if (!reach[mask][v]) continue;
            const int size = __builtin_popcount(mask);
            if (size >= 3 && a[v][low]) lengths.insert(size);
            for (int w = low + 1; w < n; ++w)
                if (!(mask >> w & 1) && a[v][w]) reach[mask | (1u << w)][w] = 1;
        }
    }
    return lengths;
}

inline bool naive_isomorphic(const Graph& x, const Graph& y) {
    if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
    const auto a = adjacency_matrix(x);
    const auto b = adjacency_matrix(y);
    std::vector<int> p(x.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < x.vertex_count() && ok; ++u)
            for (int v = u + 1; v < x.vertex_count() && ok; ++v) ok = a[u][v] == b[p[u]][p[v]];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline int naive_independence(const Graph& g) {
    const int n = g.vertex_count();
    const auto a = adjacency_matrix(g);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && a[u][v]) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph random_graph(int n, double p, SplitMix64& rng) {
    GraphBuilder b(n);
    const auto threshold = static_cast<std::uint64_t>(p * 1000000.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(1000000) < threshold) b.add_edge(u, v);
    return std::move(b).build();
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
    return std::move(b).build();
}

inline std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    rng.shuffle(std::span<int>(p));
    return p;
}

inline int triangle_count(const Graph& g) {
    const auto a = adjacency_matrix(g);
    const int n = g.vertex_count();
    int count = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) count += a[u][v] && a[v][w] && a[u][w];
    return count;
}

// Connectivity by repeated relaxation over the edge list.
inline bool naive_connected(const Hypergraph& h) {
    if (h.vertex_count() == 0) return true;
    std::vector<char> seen(h.vertex_count(), 0);
    seen[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : h.edges()) {
            const bool touched = std::any_of(e.begin(), e.end(), [&](Vertex v) { return seen[v]; });
            if (!touched) continue;
            for (Vertex v : e) {
                if (!seen[v]) {
                    seen[v] = 1;
                    changed = true;
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

inline std::vector<int> sorted_degrees(const Hypergraph& h) {
    std::vector<int> d;
    for (Vertex v = 0; v < h.vertex_count(); ++v) d.push_back(h.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// Random gluing family for t = 3, k = 3 and depth q, where the m = 2^(2q-1)
// level-q positions are bit vectors: bit 0 separates clique siblings and bits
// 0-1 the children of one parent. Copy c sends j to bits(j) permuted by s_c
// and xored with a random mask. With s_a(0) outside {s_b(0), s_b(1)} for
// a != b, no pair is siblings in one copy and children of one parent in
// another; the three sibling directions are independent, so no triangle runs
// through three copies either.
inline std::vector<std::vector<int>> xor_family(int q, SplitMix64& rng) {
    const int bits = 2 * q - 1;
    const int m = 1 << bits;
    std::vector<std::vector<int>> sigma(3, std::vector<int>(bits));
    for (;;) {
        for (auto& s : sigma) {
            std::iota(s.begin(), s.end(), 0);
            rng.shuffle(std::span<int>(s));
        }
        bool ok = true;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b && (sigma[a][0] == sigma[b][0] || sigma[a][0] == sigma[b][1])) ok = false;
        if (ok) break;
    }
    std::vector<std::vector<int>> perms(3, std::vector<int>(m));
    for (int c = 0; c < 3; ++c) {
        const int mask = static_cast<int>(rng.below(m));
        for (int j = 0; j < m; ++j) {
            int pos = 0;
            for (int i = 0; i < bits; ++i) pos |= (j >> sigma[c][i] & 1) << i;
            perms[c][j] = pos ^ mask;
        }
    }
    return perms;
}

// The 8-vertex piece used to show that an arbitrary switch can disconnect:
// vertex 7 lies in a single edge, every other vertex in two.
inline Hypergraph adversarial_piece() {
    return make_hypergraph(8, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 6}, {5, 6, 7}});
}

// Three pieces plus one edge through their degree-1 vertices: connected,
// 2-regular and 3-uniform, yet that extra edge is a cut-edge-like choice.
inline Hypergraph adversarial_hypergraph() {
    const Hypergraph piece = adversarial_piece();
    std::vector<HyperEdge> edges;
    for (int c = 0; c < 3; ++c)
        for (auto e : piece.edges()) {
            for (auto& v : e) v += 8 * c;
            edges.push_back(e);
        }
    edges.push_back({7, 15, 23});
    return make_hypergraph(24, std::move(edges));
}

}  // namespace clf::testing
