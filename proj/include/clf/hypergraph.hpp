#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "clf/graph.hpp"

namespace clf {

using HyperEdge = std::vector<Vertex>;

/// Simple hypergraph: each edge is a strictly increasing vertex list of size
/// at least two, and the edge list is sorted lexicographically. "Stored order"
/// everywhere below refers to this sorted order.
class Hypergraph {
public:
    Hypergraph() = default;

    int vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<HyperEdge>& edges() const { return edges_; }
    const HyperEdge& edge(std::size_t i) const { return edges_.at(i); }

    // Indices of the edges containing v, in stored order.
    std::span<const std::size_t> incident_edges(Vertex v) const { return incidence_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }
    int min_degree() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    friend Hypergraph make_hypergraph(int, std::vector<HyperEdge>);
    int vertex_count_ = 0;
    std::vector<HyperEdge> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

// Canonicalizes (sorts each edge and the edge list). Rejects out-of-range
// indices, repeated vertices inside an edge, edges of size < 2 and duplicates.
Hypergraph make_hypergraph(int vertex_count, std::vector<HyperEdge> edges);

std::optional<int> uniformity(const Hypergraph& h);
std::optional<int> regularity(const Hypergraph& h);
bool is_linear(const Hypergraph& h);
// Connectivity of the incidence structure; isolated vertices count as
// separate components.
bool is_connected(const Hypergraph& h);
std::vector<std::vector<Vertex>> components(const Hypergraph& h);

// Bipartite graph on V(H) ∪ E(H): vertices 0..n-1 are H's vertices and
// n..n+|E|-1 its edges in stored order.
Graph incidence_graph(const Hypergraph& h);

/// Berge cycle v_0, e_0, ..., v_{l-1}, e_{l-1} with v_i ∈ e_{i-1} ∩ e_i.
struct BergeCycle {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> edges;

    std::size_t length() const { return vertices.size(); }
};

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c);

/// Berge girth; `girth` is empty for Berge-acyclic hypergraphs.
struct BergeGirthResult {
    std::optional<int> girth;
    std::optional<BergeCycle> witness;

    bool is_finite() const { return girth.has_value(); }
};

// girth(ι(H)) / 2, with the incidence-graph cycle translated into a witness.
BergeGirthResult berge_girth(const Hypergraph& h);

Hypergraph remove_edge(const Hypergraph& h, std::size_t edge_index);
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

// Edge indices e with H - e connected. Requires H connected, δ(H) >= 2.
std::vector<std::size_t> removable_edges(const Hypergraph& h);

// First edge in stored order whose removal keeps H connected. Such an edge
// always exists for connected H with δ(H) >= 2 and no trivial edges.
std::size_t find_removable_edge(const Hypergraph& h);

// Switching of e ∈ E(H1) and f ∈ E(H2) on the disjoint union H1 ∪ H2, where
// H2's vertices are shifted by n(H1). With e_1 (f_1) the first `split`
// vertices of e (f) and e_2, f_2 the rest, e and f are replaced by
// e* = e_1 ∪ f_2 and f* = e_2 ∪ f_1. Every vertex keeps its degree.
Hypergraph switch_edges(const Hypergraph& h1, const Hypergraph& h2, std::size_t e,
                        std::size_t f, int split = 1);

// Folds q copies of H together by repeated switching, each step using
// removable edges on both sides. Output has q * n(H) vertices.
Hypergraph chain_switch(const Hypergraph& h, int q, int split = 1);

}  // namespace clf
