#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace clf {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept strictly increasing, so two graphs compare equal
/// exactly when their edge sets are equal. Values are immutable once built;
/// use GraphBuilder or make_graph to create them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    int min_degree() const;
    int max_degree() const;
    bool has_edge(Vertex u, Vertex v) const;

    // All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int vertex_count);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }

    // Returns false when the edge is already present. Loops and out-of-range
    // endpoints throw.
    bool add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    Graph build() &&;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::unordered_set<std::uint64_t> present_;
};

// Strict constructor: rejects out-of-range indices, loops and repeated pairs.
Graph make_graph(int vertex_count, std::span<const Edge> edges);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_copies(const Graph& g, int copies);

// G[N(v)], relabeled 0..deg(v)-1 in neighbor order.
Graph link_of(const Graph& g, Vertex v);

// G[S], relabeled in increasing order of original index. Duplicates in S are
// ignored.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Maximal connected vertex sets, each sorted, ordered by minimum element.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);

// Backtracking isomorphism test with degree and neighbor-degree pruning.
// Intended for graphs up to roughly 32 vertices (links, small patterns).
bool is_isomorphic(const Graph& a, const Graph& b);

/// Cycle lengths found by a bounded search, each with one witness.
///
/// A witness is a vertex sequence starting at the cycle's minimum vertex; for
/// every length it is the lexicographically least such sequence.
struct CycleProfile {
    int search_bound = 0;
    std::map<int, std::vector<Vertex>> witnesses;

    bool contains(int length) const { return witnesses.contains(length); }
    std::vector<int> lengths() const;
    std::optional<int> shortest() const;
    std::optional<int> longest() const;
};

// Calls visit once per cycle of length 3..bound. The sequence starts at the
// cycle's minimum vertex and its second vertex is smaller than its last.
// Cycles are produced in lexicographic order of that sequence. Returning false
// from visit stops the search.
void for_each_cycle(const Graph& g, int bound,
                    const std::function<bool(std::span<const Vertex>)>& visit);

CycleProfile cycle_lengths_up_to(const Graph& g, int bound);

// First cycle (in for_each_cycle order) whose length lies in [min_length,
// max_length].
std::optional<std::vector<Vertex>> find_cycle_in_range(const Graph& g, int min_length,
                                                       int max_length);

// A shortest cycle, or nothing for forests. BFS from every vertex.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

inline constexpr int kCircumferenceLimit = 16;
inline constexpr int kIndependenceLimit = 32;

// Exact, for graphs with at most kCircumferenceLimit vertices.
std::optional<int> circumference_small(const Graph& g);

// Exact, for graphs with at most kIndependenceLimit vertices.
int independence_number(const Graph& g);

// G_1 □ ... □ G_r with vertices ordered lexicographically by coordinate tuple.
Graph cartesian_product(std::span<const Graph> factors);

// G ∨_S H: G plus one fresh copy H_v per v in S, each vertex of H_v joined to
// v. New vertices are appended in increasing v, then in H's vertex order.
Graph join_over(const Graph& g, std::span<const Vertex> subset, const Graph& h);

// C_k (on 0..k-1 in cyclic order) plus chords from vertex 0 to 2, 3, ..., j+1.
Graph c_k_j_graph(int k, int j);

// Bipartition as a side label per vertex, or nothing if the graph has an odd
// cycle. Each component's minimum vertex is put on side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace clf
