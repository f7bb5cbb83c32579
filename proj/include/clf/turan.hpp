#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "clf/graph.hpp"

namespace clf {

// Forbidden (non-induced) subgraph of an induced Turán instance.
enum class Forbidden {
    Cycle,            // C_k
    Matching,         // sK_2
    CycleWithChords,  // the canonical member of C_{k,j}, see c_k_j_graph
};

/// ex_ind(n; H, K_{1,t}): maximum edges of an n-vertex graph with no H
/// subgraph and no induced K_{1,t}.
struct TuranInstance {
    Forbidden kind = Forbidden::Cycle;
    int k = 3;  // cycle length (Cycle, CycleWithChords)
    int s = 1;  // matching size (Matching)
    int j = 0;  // chord count (CycleWithChords)
    int t = 2;
    int n = 1;

    static TuranInstance cycle(int k, int t, int n);
    static TuranInstance matching(int s, int t, int n);
    static TuranInstance cycle_with_chords(int k, int j, int t, int n);

    // Parses "C4", "2K2" or "C5+2" (C_{5,2}).
    static TuranInstance parse(std::string_view forbidden, int t, int n);

    void validate() const;
    Graph pattern() const;
    std::string forbidden_name() const;
    // The closed-form cycle bound is sharp only for t >= 3.
    bool sharp_bound_admissible() const { return kind != Forbidden::Matching && t >= 3; }
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// (k-2)(t-1)n/2 for C_k and C_{k,j}; s(t+2s-2) for sK_2.
Rational turan_upper_bound(const TuranInstance& instance);

// Edge count of the lower-bound witness: floor(n/2) for cycle-type
// instances, C(2s-1, 2) for sK_2.
std::int64_t witness_lower_bound(const TuranInstance& instance);

// floor(n/2) K_2 (plus an isolated vertex for odd n).
Graph witness_matching(int n);
// K_{2s-1} together with n-2s+1 isolated vertices.
Graph witness_clique_plus_isolates(int s, int n);

inline constexpr int kOracleMaxVertices = 7;

// Exact ex_ind(n; H, K_{1,t}) by enumerating all labeled graphs on n <= 7
// vertices. Uses only bitmask arithmetic, no other library routine.
int brute_force_turind(const TuranInstance& instance);

}  // namespace clf
