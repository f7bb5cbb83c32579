#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "clf/graph.hpp"
#include "clf/hypergraph.hpp"

namespace clf {

// Replaces every hyperedge by a clique. Rejects non-linear input.
Graph expand_to_cliques(const Hypergraph& h);

// Inverse of expand_to_cliques on graphs with constant link tK_{k-1}: the
// hyperedges are exactly the k-cliques. Throws InvalidArgument when the link
// check fails.
Hypergraph contract_cliques(const Graph& g, int k);

// The hypergraph whose incidence graph is B. Vertices 0..left_size-1 of B are
// the hypergraph vertices; every remaining vertex becomes one edge.
Hypergraph from_incidence(const Graph& b, int left_size);

// Places F on every k-clique of G (F's vertex i goes to the i-th smallest
// clique vertex) and drops all other edges. With a rotation seed, each clique
// gets its own random cyclic shift of that assignment.
Graph substitute_link(const Graph& g, int k, const Graph& f,
                      std::optional<std::uint64_t> rotation_seed = std::nullopt);

/// Membership of one object in the families L_{k,t} (constant link
/// tK_{k-1}), H_{k,t} (t-regular k-uniform, Berge girth >= 4) and B_{k,t}
/// (bipartite, degrees t and k, girth >= 8).
///
/// girth_class is the smallest g <= search_bound such that the object sits in
/// the refined g-family; when nothing is found up to the bound,
/// girth_beyond_bound is set instead.
struct FamilyMembership {
    int k = 0;
    int t = 0;
    int search_bound = 0;
    bool in_l = false;
    bool in_h = false;
    bool in_b = false;
    std::optional<int> girth_class;
    bool girth_beyond_bound = false;

    std::string describe() const;
};

// Classifies G as a graph candidate for L_{k,t}. For members, the H and B
// flags are evaluated on contract_cliques(G) and its incidence graph. The
// g-class is the shortest cycle not contained in a single k-clique.
FamilyMembership classify_graph(const Graph& g, int k, int t, int search_bound);

// Classifies H as a candidate for H_{k,t}; the g-class is its Berge girth.
FamilyMembership classify_hypergraph(const Hypergraph& h, int k, int t, int search_bound);

// Biregular bipartite test for B_{k,t}: left side degree t, right side
// degree k, girth at least 8.
bool in_bipartite_family(const Graph& b, int left_size, int k, int t);

}  // namespace clf
