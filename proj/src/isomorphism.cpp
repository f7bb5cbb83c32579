#include <algorithm>
#include <map>

#include "clf/graph.hpp"

namespace clf {

namespace {

using Signature = std::vector<int>;  // degree followed by sorted neighbor degrees

std::vector<Signature> signatures(const Graph& g) {
    std::vector<Signature> out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& sig = out[v];
        sig.push_back(g.degree(v));
        for (Vertex w : g.neighbors(v)) sig.push_back(g.degree(w));
        std::sort(sig.begin() + 1, sig.end());
    }
    return out;
}

class Matcher {
public:
    Matcher(const Graph& a, const Graph& b, std::vector<int> class_a, std::vector<int> class_b)
        : a_(a), b_(b), n_(a.vertex_count()), class_a_(std::move(class_a)),
          class_b_(std::move(class_b)), adj_a_(matrix(a)), adj_b_(matrix(b)),
          image_(n_, -1), used_(n_, 0) {
        build_order();
    }

    bool run() { return place(0); }

private:
    static std::vector<char> matrix(const Graph& g) {
        const int n = g.vertex_count();
        std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
        for (auto [u, v] : g.edges()) {
            m[static_cast<std::size_t>(u) * n + v] = 1;
            m[static_cast<std::size_t>(v) * n + u] = 1;
        }
        return m;
    }

    // Most-constrained-first: repeatedly take the vertex with the most
    // already-ordered neighbors, breaking ties by degree.
    void build_order() {
        std::vector<int> placed_neighbors(n_, 0);
        std::vector<char> taken(n_, 0);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            for (Vertex v = 0; v < n_; ++v) {
                if (taken[v]) continue;
                if (best == -1 || placed_neighbors[v] > placed_neighbors[best] ||
                    (placed_neighbors[v] == placed_neighbors[best] &&
                     a_.degree(v) > a_.degree(best))) {
                    best = v;
                }
            }
            taken[best] = 1;
            order_.push_back(best);
            for (Vertex w : a_.neighbors(best)) ++placed_neighbors[w];
        }
    }

    bool consistent(Vertex va, Vertex vb, std::size_t depth) const {
        for (std::size_t i = 0; i < depth; ++i) {
            Vertex pa = order_[i];
            Vertex pb = image_[pa];
            if (adj_a_[static_cast<std::size_t>(va) * n_ + pa] !=
                adj_b_[static_cast<std::size_t>(vb) * n_ + pb]) {
                return false;
            }
        }
        return true;
    }

    bool place(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex va = order_[depth];
        for (Vertex vb = 0; vb < n_; ++vb) {
            if (used_[vb] || class_b_[vb] != class_a_[va]) continue;
            if (!consistent(va, vb, depth)) continue;
            image_[va] = vb;
            used_[vb] = 1;
            if (place(depth + 1)) return true;
            used_[vb] = 0;
            image_[va] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    int n_;
    std::vector<int> class_a_, class_b_;
    std::vector<char> adj_a_, adj_b_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto sig_a = signatures(a);
    auto sig_b = signatures(b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::map<Signature, int> ids;
    for (const auto& s : sig_a) ids.try_emplace(s, static_cast<int>(ids.size()));
    std::vector<int> class_a, class_b;
    for (const auto& s : sig_a) class_a.push_back(ids.at(s));
    for (const auto& s : sig_b) class_b.push_back(ids.at(s));
    return Matcher(a, b, std::move(class_a), std::move(class_b)).run();
}

}  // namespace clf
