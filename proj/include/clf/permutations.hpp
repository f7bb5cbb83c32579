#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace clf {

/// Bijections of [m] = {0..m-1}. perms[l][x] is the position of x under the
/// l-th permutation; positions are compared cyclically.
struct PermutationFamily {
    int m = 0;
    std::vector<std::vector<int>> perms;
    int separation_d = 0;

    std::size_t size() const { return perms.size(); }
    // min(|i-j|, m-|i-j|) for i = perms[l][x], j = perms[l][y].
    int distance(std::size_t l, int x, int y) const;
    bool is_valid() const;
};

// Some pair (x, y), x < y, within distance d in at least two permutations.
std::optional<std::pair<int, int>> first_separation_violation(const PermutationFamily& fam, int d);

// No pair is within cyclic distance d in two or more permutations. Scans the
// O(m d) close pairs of each permutation.
bool verify_separation(const PermutationFamily& fam, int d);

// Seeded random permutations followed by local repair: while a pair is close
// in two permutations, one endpoint is swapped in the later permutation with
// whichever of a few random elements leaves the fewest conflicts. Returns a
// verified family, or nothing once max_rounds repair passes are used up or
// the violation count stops improving. Requires count >= 2, d >= 1 and
// m > 2(d+1)count.
std::optional<PermutationFamily> find_separating_permutations(int m, int d, int count,
                                                              std::uint64_t seed,
                                                              int max_rounds = 200);

}  // namespace clf
