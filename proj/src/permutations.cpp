#include "clf/permutations.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_map>

#include "clf/errors.hpp"
#include "clf/rng.hpp"

namespace clf {

namespace {

std::uint64_t pair_key(int x, int y) {
    if (x > y) std::swap(x, y);
    return (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
}

// element_at[l][i] is the element sitting at position i of permutation l.
std::vector<std::vector<int>> inverses(const PermutationFamily& fam) {
    std::vector<std::vector<int>> inv(fam.size(), std::vector<int>(fam.m));
    for (std::size_t l = 0; l < fam.size(); ++l)
        for (int x = 0; x < fam.m; ++x) inv[l][fam.perms[l][x]] = x;
    return inv;
}

// All pairs close in at least two permutations, sorted.
std::vector<std::pair<int, int>> violations(const PermutationFamily& fam, int d) {
    const auto inv = inverses(fam);
    const int reach = std::min(d, fam.m / 2);
    std::unordered_map<std::uint64_t, std::size_t> first_perm;
    std::vector<std::uint64_t> bad;
    for (std::size_t l = 0; l < fam.size(); ++l) {
        for (int i = 0; i < fam.m; ++i) {
            for (int step = 1; step <= reach; ++step) {
                const int j = (i + step) % fam.m;
                // Avoid visiting the antipodal pair twice when m is even.
                if (2 * step == fam.m && j < i) continue;
                const auto key = pair_key(inv[l][i], inv[l][j]);
                auto [it, fresh] = first_perm.emplace(key, l);
                if (!fresh && it->second != l) {
                    bad.push_back(key);
                }
            }
        }
    }
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    std::vector<std::pair<int, int>> out;
    for (auto key : bad) out.emplace_back(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
    return out;
}

}  // namespace

int PermutationFamily::distance(std::size_t l, int x, int y) const {
    const int diff = std::abs(perms.at(l).at(x) - perms.at(l).at(y));
    return std::min(diff, m - diff);
}

bool PermutationFamily::is_valid() const {
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != m) return false;
        std::vector<char> seen(m, 0);
        for (int v : p) {
            if (v < 0 || v >= m || seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> first_separation_violation(const PermutationFamily& fam, int d) {
    if (!fam.is_valid()) throw InvalidArgument("permutation family contains a non-bijection");
    if (d < 0) throw InvalidArgument("separation distance must be non-negative");
    if (d == 0 || fam.m < 2) return std::nullopt;
    auto bad = violations(fam, d);
    if (bad.empty()) return std::nullopt;
    return bad.front();
}

bool verify_separation(const PermutationFamily& fam, int d) {
    return !first_separation_violation(fam, d).has_value();
}

std::optional<PermutationFamily> find_separating_permutations(int m, int d, int count,
                                                              std::uint64_t seed, int max_rounds) {
    if (count < 2) throw InvalidArgument("need at least two permutations");
    if (d < 1) throw InvalidArgument("separation distance d must be at least 1");
    if (max_rounds < 0) throw InvalidArgument("max_rounds must be non-negative");
    if (static_cast<long long>(m) <= 2LL * (d + 1) * count) {
        throw InvalidArgument("m = " + std::to_string(m) + " too small: need m > 2(d+1)count = " +
                              std::to_string(2LL * (d + 1) * count));
    }
    SplitMix64 rng(seed);
    PermutationFamily fam{m, {}, d};
    for (int l = 0; l < count; ++l) {
        std::vector<int> p(m);
        std::iota(p.begin(), p.end(), 0);
        rng.shuffle(std::span<int>(p));
        fam.perms.push_back(std::move(p));
    }
    auto inv = inverses(fam);
    const int reach = std::min(d, m / 2);
    // Elements near position pos of permutation l that are also close to z in
    // another permutation.
    auto conflicts = [&](std::size_t l, int z, int pos) {
        int count = 0;
        for (int step = -reach; step <= reach; ++step) {
            if (step == 0) continue;
            const int w = inv[l][((pos + step) % m + m) % m];
            if (w == z) continue;
            for (std::size_t o = 0; o < fam.size(); ++o)
                if (o != l && fam.distance(o, z, w) <= d) {
                    ++count;
                    break;
                }
        }
        return count;
    };
    constexpr int kCandidates = 12;
    constexpr int kStallRounds = 30;
    std::size_t best_count = SIZE_MAX;
    int best_round = 0;
    for (int round = 0; round <= max_rounds; ++round) {
        const auto bad = violations(fam, d);
        if (bad.empty()) return fam;
        if (round == max_rounds) break;
        if (bad.size() < best_count) {
            best_count = bad.size();
            best_round = round;
        } else if (round - best_round >= kStallRounds) {
            break;  // no progress for a while: d is likely too large for m
        }
        // For each still-violating pair (at most m per round), move one
        // endpoint in a permutation other than the first that brings it close:
        // the best of a few random swap partners.
        std::size_t repairs = 0;
        for (auto [x, y] : bad) {
            if (++repairs > static_cast<std::size_t>(m)) break;
            std::vector<std::size_t> close;
            for (std::size_t l = 0; l < fam.size(); ++l)
                if (fam.distance(l, x, y) <= d) close.push_back(l);
            if (close.size() < 2) continue;
            const auto l = close[1 + rng.below(close.size() - 1)];
            const int mover = rng.below(2) ? x : y;
            auto& perm = fam.perms[l];
            int best = -1, best_cost = 0;
            for (int c = 0; c < kCandidates; ++c) {
                const int other = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
                if (other == mover) continue;
                const int pm = perm[mover], po = perm[other];
                const int cost = conflicts(l, mover, po) + conflicts(l, other, pm) -
                                 conflicts(l, mover, pm) - conflicts(l, other, po);
                if (best < 0 || cost < best_cost) {
                    best = other;
                    best_cost = cost;
                }
            }
            if (best < 0) continue;
            std::swap(inv[l][perm[mover]], inv[l][perm[best]]);
            std::swap(perm[mover], perm[best]);
        }
    }
    return std::nullopt;
}

}  // namespace clf
