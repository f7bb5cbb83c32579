#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clf/graph.hpp"
#include "clf/hypergraph.hpp"
#include "clf/permutations.hpp"
#include "clf/verification.hpp"

namespace clf {

// Γ(G, H, F): n(H) disjoint copies of G (copy i holds vertices
// i*n(G) .. i*n(G)+n(G)-1, local order kept), plus a copy of F on every set
// f(E) = { v_{i,j} : E is the j-th edge at x_i }, where the edges at each
// vertex are numbered in stored order and F's vertex a goes to the a-th
// element of f(E) by copy index.
//
// H must be n(G)-regular and n(F)-uniform; F must have constant link L and G
// constant link tL (or equal F).
Graph gamma(const Graph& g, const Hypergraph& h, const Graph& f);

enum class TowerKind { Steiner, Affine };

/// Orders along a tower: n[i] is the order of the level-(i+1) graph and v[i]
/// the order of the hypergraph used to build the next level.
struct TowerSpec {
    TowerKind kind = TowerKind::Steiner;
    int k = 0;  // clique size (Steiner) or field order q (Affine)
    int depth = 0;
    std::vector<std::int64_t> n;
    std::vector<std::int64_t> v;
};

// n_1 = k q_factor, v_j = (k-1) n_j + 1, n_{j+1} = n_j v_j.
TowerSpec steiner_tower_spec(int k, int depth, int q_factor = 1);
// n_i = q^(2^i - 1), v_i = q^(2^i).
TowerSpec affine_tower_spec(int q, int depth);

// S_depth(k) starting from q_factor disjoint copies of K_k, each level glued
// with an S(2, k, v_j). k in {3, 4, 5}; designs for k >= 4 exist only as
// projective planes, so those towers stop at depth 2 for q_factor = 1.
Graph steiner_tower(int k, int depth, int q_factor = 1);

// A_depth(q): A_1 = K_q and A_{i+1} = Γ(A_i, H_i, K_q) where H_i uses the
// first n_i parallel classes of AG_{2^i}(q). q in {2, 3, 4, 5}.
Graph affine_tower(int q, int depth);

// (k-1)^i (t-1)^(i-1), throwing SizeLimitExceeded past 2^31.
std::int64_t level_size(int i, int k, int t);

struct TreeGlueParams {
    int t = 2;
    int k = 3;
    int q = 2;
    PermutationFamily family;  // t permutations over level_size(q, k, t)
};

// G(t, k, q, Π). Each copy of G_q has the root at local index 0 followed by
// the levels, every level in lexicographic label order. The t copies are laid
// out one after another, roots are merged, and for every j the vertices at
// level-q position perms[i][j] of copy i are merged. A merged vertex keeps the
// smallest index before the final compaction to 0..n-1. Throws
// InvalidArgument when the family would create a parallel edge or a
// triangle spanning three copies (either breaks the constant link).
Graph tree_glue(const TreeGlueParams& p);

// t (1 + sum_i m_i) - (t-1)(1 + m_q).
std::int64_t tree_glue_vertex_count(int t, int k, int q);

struct TreeGlueOutcome {
    std::optional<Graph> graph;
    std::optional<PermutationFamily> family;
    VerificationReport report;
    std::vector<std::string> warnings;
};

// Searches permutation families with separation d starting at max(m_g, t)
// (clamped to the search floor) and halving after repeated failures; each
// glued graph is certified by direct cycle search for lengths strictly
// between k and g plus the constant-link check. Seeds seed, seed+1, ... are
// used in turn.
TreeGlueOutcome tree_glue_with_cycle_target(int t, int k, int q, int g, std::uint64_t seed,
                                            int max_rounds = 200);

}  // namespace clf
