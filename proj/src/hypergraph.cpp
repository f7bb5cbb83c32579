#include "clf/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "clf/errors.hpp"

namespace clf {

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<int> parent;
};

bool connected_without(const Hypergraph& h, std::optional<std::size_t> skipped) {
    if (h.vertex_count() == 0) return true;
    DisjointSets sets(h.vertex_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        if (skipped && *skipped == i) continue;
        const auto& e = h.edge(i);
        for (std::size_t j = 1; j < e.size(); ++j) sets.unite(e[0], e[j]);
    }
    for (Vertex v = 1; v < h.vertex_count(); ++v) {
        if (sets.find(v) != sets.find(0)) return false;
    }
    return true;
}

}  // namespace

int Hypergraph::min_degree() const {
    int best = 0;
    for (std::size_t v = 0; v < incidence_.size(); ++v) {
        int d = static_cast<int>(incidence_[v].size());
        if (v == 0 || d < best) best = d;
    }
    return best;
}

Hypergraph make_hypergraph(int vertex_count, std::vector<HyperEdge> edges) {
    if (vertex_count < 0) throw InvalidArgument("negative vertex count");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e.size() < 2) throw InvalidArgument("trivial hyperedge (size < 2)");
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw InvalidArgument("hyperedge repeats vertex " +
                                  std::to_string(*std::adjacent_find(e.begin(), e.end())));
        }
        if (e.front() < 0 || e.back() >= vertex_count) {
            throw IndexOutOfRange("hyperedge vertex out of range for " +
                                  std::to_string(vertex_count) + " vertices");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        std::string text;
        for (Vertex v : *dup) text += (text.empty() ? "" : " ") + std::to_string(v);
        throw InvalidArgument("duplicate hyperedge {" + text + "}");
    }
    Hypergraph h;
    h.vertex_count_ = vertex_count;
    h.edges_ = std::move(edges);
    h.incidence_.resize(vertex_count);
    for (std::size_t i = 0; i < h.edges_.size(); ++i)
        for (Vertex v : h.edges_[i]) h.incidence_[v].push_back(i);
    return h;
}

std::optional<int> uniformity(const Hypergraph& h) {
    if (h.edge_count() == 0) return std::nullopt;
    const auto k = h.edge(0).size();
    for (const auto& e : h.edges())
        if (e.size() != k) return std::nullopt;
    return static_cast<int>(k);
}

std::optional<int> regularity(const Hypergraph& h) {
    if (h.vertex_count() == 0) return std::nullopt;
    const int t = h.degree(0);
    for (Vertex v = 1; v < h.vertex_count(); ++v)
        if (h.degree(v) != t) return std::nullopt;
    return t;
}

bool is_linear(const Hypergraph& h) {
    std::unordered_map<std::uint64_t, std::size_t> owner;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto key = (static_cast<std::uint64_t>(e[a]) << 32) | static_cast<std::uint32_t>(e[b]);
                if (!owner.emplace(key, i).second) return false;
            }
        }
    }
    return true;
}

bool is_connected(const Hypergraph& h) {
    return connected_without(h, std::nullopt);
}

std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
    DisjointSets sets(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t j = 1; j < e.size(); ++j) sets.unite(e[0], e[j]);
    std::vector<std::vector<Vertex>> out;
    std::vector<int> slot(h.vertex_count(), -1);
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        int root = sets.find(v);
        if (slot[root] == -1) {
            slot[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[root]].push_back(v);
    }
    return out;
}

Graph incidence_graph(const Hypergraph& h) {
    const int n = h.vertex_count();
    GraphBuilder b(n + static_cast<int>(h.edge_count()));
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (Vertex v : h.edge(i)) b.add_edge(v, n + static_cast<Vertex>(i));
    return std::move(b).build();
}

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
    const std::size_t len = c.vertices.size();
    if (len < 2 || c.edges.size() != len) return false;
    auto vs = c.vertices;
    auto es = c.edges;
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (c.edges[i] >= h.edge_count()) return false;
        const auto& prev = h.edge(c.edges[(i + len - 1) % len]);
        const auto& cur = h.edge(c.edges[i]);
        const Vertex v = c.vertices[i];
        if (!std::binary_search(prev.begin(), prev.end(), v)) return false;
        if (!std::binary_search(cur.begin(), cur.end(), v)) return false;
    }
    return true;
}

BergeGirthResult berge_girth(const Hypergraph& h) {
    BergeGirthResult result;
    const auto cycle = shortest_cycle(incidence_graph(h));
    if (!cycle) return result;
    const int n = h.vertex_count();
    // Rotate so the sequence starts at a hypergraph vertex, then read off the
    // alternating vertex/edge pattern.
    std::vector<Vertex> seq = *cycle;
    if (seq.front() >= n) std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    BergeCycle witness;
    for (std::size_t i = 0; i < seq.size(); i += 2) {
        witness.vertices.push_back(seq[i]);
        witness.edges.push_back(static_cast<std::size_t>(seq[i + 1] - n));
    }
    if (!is_berge_cycle(h, witness)) {
        throw IntegrityError("incidence-graph cycle did not translate to a Berge cycle");
    }
    result.girth = static_cast<int>(witness.length());
    result.witness = std::move(witness);
    return result;
}

Hypergraph remove_edge(const Hypergraph& h, std::size_t edge_index) {
    if (edge_index >= h.edge_count()) throw IndexOutOfRange("edge index out of range");
    auto edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
    return make_hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    auto edges = a.edges();
    for (auto e : b.edges()) {
        for (auto& v : e) v += a.vertex_count();
        edges.push_back(std::move(e));
    }
    return make_hypergraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::vector<std::size_t> removable_edges(const Hypergraph& h) {
    if (!is_connected(h)) throw InvalidArgument("removable edge requires a connected hypergraph");
    if (h.min_degree() < 2) throw InvalidArgument("removable edge requires minimum degree >= 2");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (connected_without(h, i)) out.push_back(i);
    return out;
}

std::size_t find_removable_edge(const Hypergraph& h) {
    if (!is_connected(h)) throw InvalidArgument("removable edge requires a connected hypergraph");
    if (h.min_degree() < 2) throw InvalidArgument("removable edge requires minimum degree >= 2");
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (connected_without(h, i)) return i;
    throw IntegrityError("no removable edge in a connected hypergraph with minimum degree >= 2");
}

Hypergraph switch_edges(const Hypergraph& h1, const Hypergraph& h2, std::size_t e,
                        std::size_t f, int split) {
    if (e >= h1.edge_count() || f >= h2.edge_count()) throw IndexOutOfRange("switch edge index out of range");
    const auto& ea = h1.edge(e);
    const auto& fb = h2.edge(f);
    if (ea.size() != fb.size()) throw InvalidArgument("switched edges differ in size");
    const int k = static_cast<int>(ea.size());
    if (split <= 0 || split >= k) {
        throw InvalidArgument("switch split must satisfy 0 < split < " + std::to_string(k));
    }
    const int shift = h1.vertex_count();
    HyperEdge e_star(ea.begin(), ea.begin() + split);
    HyperEdge f_star(ea.begin() + split, ea.end());
    for (int i = 0; i < k; ++i) (i < split ? f_star : e_star).push_back(fb[i] + shift);

    std::vector<HyperEdge> edges;
    edges.reserve(h1.edge_count() + h2.edge_count());
    for (std::size_t i = 0; i < h1.edge_count(); ++i)
        if (i != e) edges.push_back(h1.edge(i));
    for (std::size_t i = 0; i < h2.edge_count(); ++i) {
        if (i == f) continue;
        auto shifted = h2.edge(i);
        for (auto& v : shifted) v += shift;
        edges.push_back(std::move(shifted));
    }
    edges.push_back(std::move(e_star));
    edges.push_back(std::move(f_star));
    return make_hypergraph(h1.vertex_count() + h2.vertex_count(), std::move(edges));
}

Hypergraph chain_switch(const Hypergraph& h, int q, int split) {
    if (q < 1) throw InvalidArgument("chain_switch needs q >= 1");
    const auto k = uniformity(h);
    if (!k) throw InvalidArgument("chain_switch needs a uniform hypergraph");
    if (!regularity(h)) throw InvalidArgument("chain_switch needs a regular hypergraph");
    const std::size_t fresh_edge = find_removable_edge(h);
    Hypergraph acc = h;
    for (int i = 1; i < q; ++i) acc = switch_edges(acc, h, find_removable_edge(acc), fresh_edge, split);
    return acc;
}

}  // namespace clf
