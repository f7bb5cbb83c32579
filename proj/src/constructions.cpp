#include "clf/constructions.hpp"

#include <string>

#include "clf/designs.hpp"
#include "clf/errors.hpp"
#include "clf/finite_field.hpp"

namespace clf {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    constexpr std::int64_t limit = std::int64_t{1} << 40;
    if (a != 0 && b > limit / a) throw SizeLimitExceeded("tower order overflows");
    return a * b;
}

void require_link_compatible(const Graph& g, const Graph& f) {
    const auto link = common_link(f);
    if (!link) throw InvalidArgument("F does not have constant link");
    if (g == f) return;
    const int size = link->vertex_count();
    if (size == 0 || g.vertex_count() == 0 || g.degree(0) % size != 0) {
        throw InvalidArgument("G does not have constant link tL");
    }
    if (first_link_mismatch(g, *link, g.degree(0) / size)) {
        throw InvalidArgument("G does not have constant link tL");
    }
}

}  // namespace

Graph gamma(const Graph& g, const Hypergraph& h, const Graph& f) {
    const int n = g.vertex_count();
    if (h.edge_count() > 0 && uniformity(h) != f.vertex_count()) {
        throw InvalidArgument("hypergraph must be " + std::to_string(f.vertex_count()) + "-uniform");
    }
    if (h.vertex_count() > 0 && regularity(h) != n) {
        throw InvalidArgument("hypergraph must be " + std::to_string(n) + "-regular");
    }
    require_link_compatible(g, f);

    const auto total = checked_mul(n, h.vertex_count());
    GraphBuilder b(static_cast<int>(total));
    const auto g_edges = g.edges();
    for (int i = 0; i < h.vertex_count(); ++i)
        for (auto [u, v] : g_edges) b.add_edge(i * n + u, i * n + v);

    // slot[x] counts how many incident edges of x have been placed so far;
    // edges are visited in stored order, matching incident_edges(x).
    std::vector<int> slot(h.vertex_count(), 0);
    const auto f_edges = f.edges();
    std::vector<Vertex> image;
    for (const auto& e : h.edges()) {
        image.clear();
        for (Vertex x : e) image.push_back(x * n + slot[x]++);
        for (auto [a, c] : f_edges) {
            if (!b.add_edge(image[a], image[c])) throw IntegrityError("gamma placed an edge twice");
        }
    }
    return std::move(b).build();
}

TowerSpec steiner_tower_spec(int k, int depth, int q_factor) {
    if (k < 3) throw InvalidArgument("Steiner tower needs k >= 3");
    if (depth < 1) throw InvalidArgument("tower depth must be at least 1");
    if (q_factor < 1) throw InvalidArgument("q_factor must be at least 1");
    TowerSpec s{TowerKind::Steiner, k, depth, {}, {}};
    s.n.push_back(static_cast<std::int64_t>(k) * q_factor);
    for (int j = 1; j < depth; ++j) {
        const auto vj = checked_mul(k - 1, s.n.back()) + 1;
        s.v.push_back(vj);
        s.n.push_back(checked_mul(s.n.back(), vj));
    }
    return s;
}

TowerSpec affine_tower_spec(int q, int depth) {
    if (q < 2) throw InvalidArgument("affine tower needs q >= 2");
    if (depth < 1) throw InvalidArgument("tower depth must be at least 1");
    TowerSpec s{TowerKind::Affine, q, depth, {}, {}};
    std::int64_t power = static_cast<std::int64_t>(q) * q;  // q^(2^i)
    for (int i = 1; i <= depth; ++i) {
        s.n.push_back(power / q);
        if (i < depth) {
            s.v.push_back(power);
            power = checked_mul(power, power);
        }
    }
    return s;
}

Graph steiner_tower(int k, int depth, int q_factor) {
    if (k < 3 || k > 5) throw InvalidArgument("Steiner tower supports k in {3, 4, 5}");
    const auto spec = steiner_tower_spec(k, depth, q_factor);
    const Graph clique = complete_graph(k);
    Graph current = disjoint_copies(clique, q_factor);
    for (std::size_t j = 0; j < spec.v.size(); ++j) {
        if (spec.v[j] > (std::int64_t{1} << 20)) throw SizeLimitExceeded("Steiner tower level too large");
        const auto design = steiner_design(k, static_cast<int>(spec.v[j]));
        current = gamma(current, design.blocks, clique);
    }
    return current;
}

Graph affine_tower(int q, int depth) {
    if (q < 2 || q > 5 || !FiniteField::supported(q)) {
        throw InvalidArgument("affine tower supports q in {2, 3, 4, 5}");
    }
    const auto spec = affine_tower_spec(q, depth);
    const Graph clique = complete_graph(q);
    Graph current = clique;
    for (int i = 1; i < depth; ++i) {
        const auto classes = affine_lines(1 << i, q);
        const auto h = take_classes(classes, static_cast<int>(spec.n[i - 1]));
        current = gamma(current, h, clique);
    }
    return current;
}

}  // namespace clf
