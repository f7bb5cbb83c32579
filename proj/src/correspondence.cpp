#include "clf/correspondence.hpp"

#include <algorithm>
#include <unordered_map>

#include "clf/errors.hpp"
#include "clf/rng.hpp"
#include "clf/verification.hpp"

namespace clf {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Link multiplicity implied by vertex 0, or nothing when the degree is not a
// multiple of k-1.
std::optional<int> implied_multiplicity(const Graph& g, int k) {
    if (g.vertex_count() == 0) return 0;
    if (g.degree(0) % (k - 1) != 0) return std::nullopt;
    return g.degree(0) / (k - 1);
}

bool has_constant_clique_link(const Graph& g, int k, int t) {
    return !first_link_mismatch(g, complete_graph(k - 1), t).has_value();
}

// Every k-clique of a graph with constant link tK_{k-1}, found from its
// minimum vertex as {v} plus one link component.
std::vector<HyperEdge> clique_list(const Graph& g) {
    std::vector<HyperEdge> cliques;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        for (const auto& part : components(link_of(g, v))) {
            if (nbrs[part.front()] < v) continue;
            HyperEdge clique{v};
            for (Vertex i : part) clique.push_back(nbrs[i]);
            cliques.push_back(std::move(clique));
        }
    }
    return cliques;
}

// Smallest length <= bound of a cycle whose vertices do not all lie in one
// clique of the given list (which must cover every edge exactly once).
std::optional<int> shortest_uncontained_cycle(const Graph& g, const std::vector<HyperEdge>& cliques,
                                              int k, int bound) {
    std::unordered_map<std::uint64_t, std::size_t> owner;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t a = 0; a < cliques[i].size(); ++a)
            for (std::size_t b = a + 1; b < cliques[i].size(); ++b)
                owner.emplace(pair_key(cliques[i][a], cliques[i][b]), i);

    std::optional<int> best;
    for_each_cycle(g, std::min(k, bound), [&](std::span<const Vertex> cycle) {
        const auto& clique = cliques[owner.at(pair_key(cycle[0], cycle[1]))];
        const bool inside = std::all_of(cycle.begin(), cycle.end(), [&](Vertex v) {
            return std::binary_search(clique.begin(), clique.end(), v);
        });
        if (!inside) {
            const int len = static_cast<int>(cycle.size());
            if (!best || len < *best) best = len;
        }
        return !best || *best > 3;
    });
    if (best) return best;
    for (int len = k + 1; len <= bound; ++len)
        if (find_cycle_in_range(g, len, len)) return len;
    return std::nullopt;
}

}  // namespace

Graph expand_to_cliques(const Hypergraph& h) {
    if (!is_linear(h)) throw InvalidArgument("clique expansion needs a linear hypergraph");
    GraphBuilder b(h.vertex_count());
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) b.add_edge(e[i], e[j]);
    return std::move(b).build();
}

Hypergraph contract_cliques(const Graph& g, int k) {
    if (k < 2) throw InvalidArgument("clique size k must be at least 2");
    const auto t = implied_multiplicity(g, k);
    if (!t || !has_constant_clique_link(g, k, *t)) {
        throw InvalidArgument("graph does not have constant link tK_" + std::to_string(k - 1));
    }
    auto h = make_hypergraph(g.vertex_count(), clique_list(g));
    if (!is_linear(h)) throw IntegrityError("two k-cliques share two vertices");
    return h;
}

Hypergraph from_incidence(const Graph& b, int left_size) {
    if (left_size < 0 || left_size > b.vertex_count()) {
        throw InvalidArgument("left side size out of range");
    }
    std::vector<HyperEdge> edges;
    for (Vertex r = left_size; r < b.vertex_count(); ++r) {
        HyperEdge e;
        for (Vertex v : b.neighbors(r)) {
            if (v >= left_size) {
                throw InvalidArgument("edge " + std::to_string(v) + "-" + std::to_string(r) +
                                      " lies inside the right side");
            }
            e.push_back(v);
        }
        edges.push_back(std::move(e));
    }
    for (Vertex v = 0; v < left_size; ++v) {
        for (Vertex w : b.neighbors(v)) {
            if (w < left_size) {
                throw InvalidArgument("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                      " lies inside the left side");
            }
        }
    }
    return make_hypergraph(left_size, std::move(edges));
}

Graph substitute_link(const Graph& g, int k, const Graph& f,
                      std::optional<std::uint64_t> rotation_seed) {
    if (f.vertex_count() != k) throw InvalidArgument("F must have exactly k vertices");
    if (!common_link(f)) throw InvalidArgument("F does not have constant link");
    const auto h = contract_cliques(g, k);
    std::optional<SplitMix64> rng;
    if (rotation_seed) rng.emplace(*rotation_seed);
    GraphBuilder b(g.vertex_count());
    const auto f_edges = f.edges();
    for (const auto& clique : h.edges()) {
        const int shift = rng ? static_cast<int>(rng->below(static_cast<std::uint64_t>(k))) : 0;
        for (auto [u, v] : f_edges) b.add_edge(clique[(u + shift) % k], clique[(v + shift) % k]);
    }
    return std::move(b).build();
}

std::string FamilyMembership::describe() const {
    std::string out = "k=" + std::to_string(k) + " t=" + std::to_string(t);
    out += std::string(" L=") + (in_l ? "yes" : "no");
    out += std::string(" H=") + (in_h ? "yes" : "no");
    out += std::string(" B=") + (in_b ? "yes" : "no");
    if (girth_class) {
        out += " g=" + std::to_string(*girth_class);
    } else if (girth_beyond_bound) {
        out += " g>" + std::to_string(search_bound);
    }
    return out;
}

bool in_bipartite_family(const Graph& b, int left_size, int k, int t) {
    if (left_size < 0 || left_size > b.vertex_count()) return false;
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
        const bool left = v < left_size;
        if (b.degree(v) != (left ? t : k)) return false;
        for (Vertex w : b.neighbors(v))
            if ((w < left_size) == left) return false;
    }
    const auto cycle = shortest_cycle(b);
    return !cycle || cycle->size() >= 8;
}

FamilyMembership classify_graph(const Graph& g, int k, int t, int search_bound) {
    if (k < 2 || t < 1) throw InvalidArgument("classification needs k >= 2 and t >= 1");
    if (search_bound < k + 1) throw InvalidArgument("search bound must be at least k+1");
    FamilyMembership m;
    m.k = k;
    m.t = t;
    m.search_bound = search_bound;
    m.in_l = has_constant_clique_link(g, k, t);
    if (!m.in_l) return m;

    const auto h = contract_cliques(g, k);
    const auto hm = classify_hypergraph(h, k, t, search_bound);
    m.in_h = hm.in_h;
    m.in_b = hm.in_b;
    const auto g_class = shortest_uncontained_cycle(g, h.edges(), k, search_bound);
    m.girth_class = g_class;
    m.girth_beyond_bound = !g_class.has_value();
    return m;
}

FamilyMembership classify_hypergraph(const Hypergraph& h, int k, int t, int search_bound) {
    if (k < 2 || t < 1) throw InvalidArgument("classification needs k >= 2 and t >= 1");
    if (search_bound < k + 1) throw InvalidArgument("search bound must be at least k+1");
    FamilyMembership m;
    m.k = k;
    m.t = t;
    m.search_bound = search_bound;
    const bool shape = h.edge_count() > 0 && uniformity(h) == k && regularity(h) == t;
    const auto girth = berge_girth(h);
    m.in_h = shape && (!girth.girth || *girth.girth >= 4);
    m.in_b = in_bipartite_family(incidence_graph(h), h.vertex_count(), k, t);
    if (m.in_h) m.in_l = has_constant_clique_link(expand_to_cliques(h), k, t);
    if (girth.girth && *girth.girth <= search_bound) {
        m.girth_class = girth.girth;
    } else {
        m.girth_beyond_bound = true;
    }
    return m;
}

}  // namespace clf
