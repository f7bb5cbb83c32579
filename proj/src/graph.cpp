#include "clf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "clf/errors.hpp"

namespace clf {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range for graph on " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InvalidArgument("negative vertex count");
    adjacency_.resize(vertex_count);
}

int Graph::min_degree() const {
    int best = 0;
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        int d = static_cast<int>(adjacency_[v].size());
        if (v == 0 || d < best) best = d;
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

GraphBuilder::GraphBuilder(int vertex_count) {
    if (vertex_count < 0) throw InvalidArgument("negative vertex count");
    adjacency_.resize(vertex_count);
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw IndexOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (!present_.insert(edge_key(u, v)).second) return false;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
    return present_.contains(edge_key(u, v));
}

Graph GraphBuilder::build() && {
    Graph g;
    g.adjacency_ = std::move(adjacency_);
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = present_.size();
    present_.clear();
    return g;
}

Graph make_graph(int vertex_count, std::span<const Edge> edges) {
    GraphBuilder b(vertex_count);
    for (auto [u, v] : edges) {
        if (!b.add_edge(u, v)) {
            throw InvalidArgument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        }
    }
    return std::move(b).build();
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complete_bipartite_graph(int a, int b_size) {
    GraphBuilder b(a + b_size);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b_size; ++v) b.add_edge(u, a + v);
    return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
    int total = 0;
    for (const auto& p : parts) total += p.vertex_count();
    GraphBuilder b(total);
    int offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) b.add_edge(offset + u, offset + v);
        offset += p.vertex_count();
    }
    return std::move(b).build();
}

Graph disjoint_copies(const Graph& g, int copies) {
    if (copies < 0) throw InvalidArgument("negative copy count");
    std::vector<Graph> parts(copies, g);
    return disjoint_union(parts);
}

Graph link_of(const Graph& g, Vertex v) {
    check_vertex(g, v);
    auto nbrs = g.neighbors(v);
    return induced_subgraph(g, nbrs);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) check_vertex(g, v);

    GraphBuilder b(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (Vertex w : g.neighbors(sorted[i])) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
            if (it != sorted.end() && *it == w) {
                auto j = static_cast<Vertex>(it - sorted.begin());
                if (static_cast<Vertex>(i) < j) b.add_edge(static_cast<Vertex>(i), j);
            }
        }
    }
    return std::move(b).build();
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (Vertex w : g.neighbors(comp[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

Graph cartesian_product(std::span<const Graph> factors) {
    if (factors.size() < 2) throw InvalidArgument("cartesian product needs at least two factors");
    std::size_t total = 1;
    for (const auto& f : factors) {
        if (f.vertex_count() == 0) throw InvalidArgument("empty factor in cartesian product");
        total *= static_cast<std::size_t>(f.vertex_count());
        if (total > (1u << 24)) throw SizeLimitExceeded("cartesian product too large");
    }
    // stride[i] = product of the sizes of the factors after i, so the first
    // coordinate is the most significant digit.
    std::vector<std::size_t> stride(factors.size(), 1);
    for (std::size_t i = factors.size() - 1; i > 0; --i)
        stride[i - 1] = stride[i] * static_cast<std::size_t>(factors[i].vertex_count());

    GraphBuilder b(static_cast<int>(total));
    for (std::size_t x = 0; x < total; ++x) {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto coord = static_cast<Vertex>((x / stride[i]) % factors[i].vertex_count());
            for (Vertex w : factors[i].neighbors(coord)) {
                if (w <= coord) continue;
                const std::size_t y = x + static_cast<std::size_t>(w - coord) * stride[i];
                b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
            }
        }
    }
    return std::move(b).build();
}

Graph join_over(const Graph& g, std::span<const Vertex> subset, const Graph& h) {
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) check_vertex(g, v);

    const int hn = h.vertex_count();
    GraphBuilder b(g.vertex_count() + static_cast<int>(sorted.size()) * hn);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    const auto h_edges = h.edges();
    Vertex next = g.vertex_count();
    for (Vertex v : sorted) {
        for (auto [a, c] : h_edges) b.add_edge(next + a, next + c);
        for (Vertex a = 0; a < hn; ++a) b.add_edge(v, next + a);
        next += hn;
    }
    return std::move(b).build();
}

Graph c_k_j_graph(int k, int j) {
    if (k < 3) throw InvalidArgument("C_{k,j} needs k >= 3");
    if (j < 0 || j > k - 3) {
        throw InvalidArgument("C_{k,j} needs 0 <= j <= k-3 (vertex 0 has k-3 non-neighbors)");
    }
    GraphBuilder b(k);
    for (Vertex v = 0; v < k; ++v) b.add_edge(v, (v + 1) % k);
    for (int c = 0; c < j; ++c) b.add_edge(0, 2 + c);
    return std::move(b).build();
}

}  // namespace clf
