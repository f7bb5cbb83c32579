#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "clf/errors.hpp"
#include "clf/graph.hpp"

namespace clf {

std::vector<int> CycleProfile::lengths() const {
    std::vector<int> out;
    for (const auto& [len, _] : witnesses) out.push_back(len);
    return out;
}

std::optional<int> CycleProfile::shortest() const {
    if (witnesses.empty()) return std::nullopt;
    return witnesses.begin()->first;
}

std::optional<int> CycleProfile::longest() const {
    if (witnesses.empty()) return std::nullopt;
    return witnesses.rbegin()->first;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 2;

// Depth-bounded DFS over simple paths that start at `start` and only use
// larger vertices. `dist` holds BFS distances back to the start inside that
// vertex set and prunes paths that cannot close within the bound.
class CycleSearch {
public:
    CycleSearch(const Graph& g, int bound,
                const std::function<bool(std::span<const Vertex>)>& visit)
        : g_(g), bound_(bound), visit_(visit), dist_(g.vertex_count(), kUnreached),
          on_path_(g.vertex_count(), 0) {}

    void run() {
        for (Vertex s = 0; s < g_.vertex_count() && !stopped_; ++s) {
            start_ = s;
            label_ball();
            path_.assign(1, s);
            on_path_[s] = 1;
            extend(s);
            on_path_[s] = 0;
            for (Vertex v : touched_) dist_[v] = kUnreached;
        }
    }

private:
    void label_ball() {
        touched_.assign(1, start_);
        dist_[start_] = 0;
        const int radius = bound_ / 2;
        for (std::size_t head = 0; head < touched_.size(); ++head) {
            Vertex u = touched_[head];
            if (dist_[u] >= radius) continue;
            for (Vertex w : g_.neighbors(u)) {
                if (w > start_ && dist_[w] == kUnreached) {
                    dist_[w] = dist_[u] + 1;
                    touched_.push_back(w);
                }
            }
        }
    }

    void extend(Vertex u) {
        const int edges_so_far = static_cast<int>(path_.size()) - 1;
        for (Vertex w : g_.neighbors(u)) {
            if (stopped_) return;
            if (w == start_) {
                if (path_.size() >= 3 && path_[1] < path_.back()) {
                    if (!visit_(path_)) stopped_ = true;
                }
                continue;
            }
            if (w < start_ || on_path_[w] || dist_[w] == kUnreached) continue;
            if (edges_so_far + 1 + dist_[w] > bound_) continue;
            path_.push_back(w);
            on_path_[w] = 1;
            extend(w);
            on_path_[w] = 0;
            path_.pop_back();
        }
    }

    const Graph& g_;
    int bound_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    std::vector<int> dist_;
    std::vector<char> on_path_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    bool stopped_ = false;
};

}  // namespace

void for_each_cycle(const Graph& g, int bound,
                    const std::function<bool(std::span<const Vertex>)>& visit) {
    if (bound < 3) throw InvalidArgument("cycle search bound must be at least 3");
    CycleSearch(g, bound, visit).run();
}

CycleProfile cycle_lengths_up_to(const Graph& g, int bound) {
    CycleProfile profile;
    profile.search_bound = bound;
    const int attainable = std::min(bound, g.vertex_count());
    const std::size_t wanted = attainable >= 3 ? static_cast<std::size_t>(attainable - 2) : 0;
    if (wanted == 0) {
        if (bound < 3) throw InvalidArgument("cycle search bound must be at least 3");
        return profile;
    }
    for_each_cycle(g, bound, [&](std::span<const Vertex> cycle) {
        profile.witnesses.try_emplace(static_cast<int>(cycle.size()), cycle.begin(), cycle.end());
        return profile.witnesses.size() < wanted;
    });
    return profile;
}

std::optional<std::vector<Vertex>> find_cycle_in_range(const Graph& g, int min_length,
                                                       int max_length) {
    std::optional<std::vector<Vertex>> found;
    if (max_length < 3 || min_length > max_length) return found;
    for_each_cycle(g, max_length, [&](std::span<const Vertex> cycle) {
        if (static_cast<int>(cycle.size()) < min_length) return true;
        found.emplace(cycle.begin(), cycle.end());
        return false;
    });
    return found;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    const int n = g.vertex_count();
    int best = kUnreached;
    Vertex best_root = -1, best_u = -1, best_w = -1;
    std::vector<int> dist(n, kUnreached);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> order;
    for (Vertex root = 0; root < n && best > 3; ++root) {
        order.assign(1, root);
        dist[root] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            Vertex u = order[head];
            if (2 * dist[u] >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    order.push_back(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (len < best) {
                        best = len;
                        best_root = root;
                        best_u = u;
                        best_w = w;
                    }
                }
            }
        }
        for (Vertex v : order) {
            dist[v] = kUnreached;
            parent[v] = -1;
        }
    }
    if (best == kUnreached) return std::nullopt;

    // Rebuild the BFS tree of the minimizing root to recover both branches.
    // At the global minimum the two root paths share only the root.
    order.assign(1, best_root);
    dist[best_root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Vertex u = order[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                order.push_back(w);
            }
        }
    }
    std::vector<Vertex> left, right;
    for (Vertex v = best_u; v != -1; v = parent[v]) left.push_back(v);
    for (Vertex v = best_w; v != -1; v = parent[v]) right.push_back(v);
    std::reverse(left.begin(), left.end());
    right.pop_back();  // root already in left
    left.insert(left.end(), right.begin(), right.end());
    if (static_cast<int>(left.size()) != best) {
        throw IntegrityError("shortest cycle reconstruction produced a non-simple cycle");
    }
    return left;
}

std::optional<int> circumference_small(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCircumferenceLimit) {
        throw SizeLimitExceeded("circumference_small supports at most " +
                                std::to_string(kCircumferenceLimit) + " vertices, got " +
                                std::to_string(n));
    }
    std::vector<std::uint32_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= 1u << w;

    // reach[mask]: endpoints v such that a path from min(mask) to v covers
    // exactly mask.
    const std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> reach(full, 0);
    for (Vertex s = 0; s < n; ++s) reach[1u << s] = 1u << s;
    int longest = 0;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        const int s = std::countr_zero(mask);
        const int size = std::popcount(mask);
        if (size >= 3 && (ends & nbr[s])) longest = std::max(longest, size);
        const std::uint32_t allowed = ~mask & ~((1u << (s + 1)) - 1) & (full - 1);
        for (std::uint32_t e = ends; e; e &= e - 1) {
            const int v = std::countr_zero(e);
            for (std::uint32_t next = nbr[v] & allowed; next; next &= next - 1) {
                const int w = std::countr_zero(next);
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    if (longest == 0) return std::nullopt;
    return longest;
}

namespace {

int max_independent(std::uint64_t mask, const std::vector<std::uint64_t>& nbr) {
    if (mask == 0) return 0;
    int best_v = -1, best_deg = -1, low_v = -1, low_deg = 65;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int d = std::popcount(nbr[v] & mask);
        if (d > best_deg) {
            best_deg = d;
            best_v = v;
        }
        if (d < low_deg) {
            low_deg = d;
            low_v = v;
        }
    }
    if (best_deg == 0) return std::popcount(mask);
    // A vertex of degree <= 1 belongs to some maximum independent set.
    if (low_deg <= 1) {
        return 1 + max_independent(mask & ~nbr[low_v] & ~(std::uint64_t{1} << low_v), nbr);
    }
    const std::uint64_t bit = std::uint64_t{1} << best_v;
    int with = 1 + max_independent(mask & ~nbr[best_v] & ~bit, nbr);
    if (with >= std::popcount(mask & ~bit)) return with;
    int without = max_independent(mask & ~bit, nbr);
    return std::max(with, without);
}

}  // namespace

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kIndependenceLimit) {
        throw SizeLimitExceeded("independence_number supports at most " +
                                std::to_string(kIndependenceLimit) + " vertices, got " +
                                std::to_string(n));
    }
    std::vector<std::uint64_t> nbr(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[v] |= std::uint64_t{1} << w;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return max_independent(all, nbr);
}

}  // namespace clf
