#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clf/hypergraph.hpp"

namespace clf {

enum class DesignKind { SteinerTriple, Projective, Affine };

std::string to_string(DesignKind kind);

/// A Steiner system S(2, k, v) with its blocks as a hypergraph on v points.
struct DesignSystem {
    DesignKind kind = DesignKind::SteinerTriple;
    int points = 0;
    int block_size = 0;
    Hypergraph blocks;
};

/// A resolvable design together with its parallel classes. Each class lists
/// block indices into design.blocks (stored order).
struct ParallelClassSet {
    DesignSystem design;
    std::vector<std::vector<std::size_t>> classes;
};

inline constexpr int kAffinePointLimit = 1024;

// S(2,3,7) from the difference set {0,1,3} mod 7.
DesignSystem fano();

// S(2,3,v) for v = 1 or 3 (mod 6), v >= 7: Bose for v = 3 (mod 6), Skolem for
// v = 1 (mod 6).
DesignSystem steiner_triple(int v);

// PG(2,q) = S(2, q+1, q^2+q+1).
DesignSystem projective_plane(int q);

// Lines of AG_m(q) = S(2, q, q^m), resolved into (q^m-1)/(q-1) parallel
// classes. A point is the base-q number x_0 x_1 ... x_{m-1} (x_0 most
// significant). Classes follow their direction vectors, normalized to a
// leading 1, in lexicographic order. At most kAffinePointLimit points.
ParallelClassSet affine_lines(int m, int q);

// Sub-hypergraph on all points made of the blocks of `count` classes: the
// first `count` in order, or a seeded random choice.
Hypergraph take_classes(const ParallelClassSet& p, int count,
                        std::optional<std::uint64_t> seed = std::nullopt);

// Every edge has size k and every point pair lies in exactly one edge.
bool is_steiner_system(const Hypergraph& h, int k);

// Some S(2,k,v) from the generators above, or DesignUnavailable.
DesignSystem steiner_design(int k, int v);

}  // namespace clf
