#include "clf/turan.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <numeric>

#include "clf/errors.hpp"

namespace clf {

namespace {

struct Pattern {
    int vertices = 0;
    std::vector<Edge> edges;
};

Pattern pattern_of(const TuranInstance& inst) {
    Pattern p;
    switch (inst.kind) {
        case Forbidden::Cycle:
        case Forbidden::CycleWithChords:
            p.vertices = inst.k;
            for (int v = 0; v < inst.k; ++v) p.edges.emplace_back(v, (v + 1) % inst.k);
            if (inst.kind == Forbidden::CycleWithChords)
                for (int c = 0; c < inst.j; ++c) p.edges.emplace_back(0, 2 + c);
            break;
        case Forbidden::Matching:
            p.vertices = 2 * inst.s;
            for (int i = 0; i < inst.s; ++i) p.edges.emplace_back(2 * i, 2 * i + 1);
            break;
    }
    return p;
}

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InvalidArgument("cannot parse forbidden graph '" + std::string(whole) + "'");
    }
    return value;
}

using Adjacency = std::array<std::uint8_t, kOracleMaxVertices>;

bool has_independent(std::uint8_t candidates, int need, const Adjacency& adj) {
    if (need == 0) return true;
    if (std::popcount(candidates) < need) return false;
    const int u = std::countr_zero(candidates);
    const auto bit = static_cast<std::uint8_t>(1u << u);
    if (has_independent(static_cast<std::uint8_t>(candidates & ~adj[u] & ~bit), need - 1, adj))
        return true;
    return has_independent(static_cast<std::uint8_t>(candidates & ~bit), need, adj);
}

bool has_induced_star(int n, int t, const Adjacency& adj) {
    for (int v = 0; v < n; ++v)
        if (has_independent(adj[v], t, adj)) return true;
    return false;
}

// Backtracking injection of the pattern into the host graph.
bool embeds(const Pattern& p, std::vector<std::vector<int>>& earlier, int index,
            std::array<int, kOracleMaxVertices>& image, std::uint8_t used, int n,
            const Adjacency& adj) {
    if (index == p.vertices) return true;
    for (int h = 0; h < n; ++h) {
        if (used >> h & 1) continue;
        bool ok = true;
        for (int prev : earlier[index]) {
            if (!(adj[h] >> image[prev] & 1)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[index] = h;
        if (embeds(p, earlier, index + 1, image, static_cast<std::uint8_t>(used | (1u << h)), n, adj))
            return true;
    }
    return false;
}

}  // namespace

TuranInstance TuranInstance::cycle(int k, int t, int n) {
    TuranInstance i;
    i.kind = Forbidden::Cycle;
    i.k = k;
    i.t = t;
    i.n = n;
    i.validate();
    return i;
}

TuranInstance TuranInstance::matching(int s, int t, int n) {
    TuranInstance i;
    i.kind = Forbidden::Matching;
    i.s = s;
    i.t = t;
    i.n = n;
    i.validate();
    return i;
}

TuranInstance TuranInstance::cycle_with_chords(int k, int j, int t, int n) {
    TuranInstance i;
    i.kind = Forbidden::CycleWithChords;
    i.k = k;
    i.j = j;
    i.t = t;
    i.n = n;
    i.validate();
    return i;
}

TuranInstance TuranInstance::parse(std::string_view text, int t, int n) {
    if (text.size() >= 2 && text[0] == 'C') {
        auto body = text.substr(1);
        auto plus = body.find('+');
        if (plus == std::string_view::npos) return cycle(parse_int(body, text), t, n);
        return cycle_with_chords(parse_int(body.substr(0, plus), text),
                                 parse_int(body.substr(plus + 1), text), t, n);
    }
    if (text.size() >= 3 && text.substr(text.size() - 2) == "K2") {
        return matching(parse_int(text.substr(0, text.size() - 2), text), t, n);
    }
    throw InvalidArgument("unsupported forbidden graph '" + std::string(text) +
                          "' (expected Ck, sK2 or Ck+j)");
}

void TuranInstance::validate() const {
    if (t < 2) throw InvalidArgument("star parameter t must be at least 2");
    if (n < 1) throw InvalidArgument("n must be at least 1");
    switch (kind) {
        case Forbidden::Cycle:
            if (k < 3) throw InvalidArgument("cycle length k must be at least 3");
            break;
        case Forbidden::CycleWithChords:
            if (k < 3) throw InvalidArgument("cycle length k must be at least 3");
            if (j < 0 || j > k - 3) throw InvalidArgument("C_{k,j} needs 0 <= j <= k-3");
            break;
        case Forbidden::Matching:
            if (s < 1) throw InvalidArgument("matching size s must be at least 1");
            break;
    }
}

Graph TuranInstance::pattern() const {
    auto p = pattern_of(*this);
    return make_graph(p.vertices, p.edges);
}

std::string TuranInstance::forbidden_name() const {
    switch (kind) {
        case Forbidden::Cycle: return "C" + std::to_string(k);
        case Forbidden::Matching: return std::to_string(s) + "K2";
        case Forbidden::CycleWithChords: return "C" + std::to_string(k) + "+" + std::to_string(j);
    }
    return {};
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational turan_upper_bound(const TuranInstance& inst) {
    inst.validate();
    if (inst.kind == Forbidden::Matching) {
        return Rational::make(static_cast<std::int64_t>(inst.s) * (inst.t + 2 * inst.s - 2), 1);
    }
    // Chvátal: R(P_{k-1}, K_t) = (k-2)(t-1) + 1 bounds the maximum degree.
    return Rational::make(static_cast<std::int64_t>(inst.k - 2) * (inst.t - 1) * inst.n, 2);
}

std::int64_t witness_lower_bound(const TuranInstance& inst) {
    inst.validate();
    if (inst.kind == Forbidden::Matching) {
        if (inst.n < 2 * inst.s - 1) throw InvalidArgument("clique witness needs n >= 2s-1");
        const std::int64_t c = 2 * inst.s - 1;
        return c * (c - 1) / 2;
    }
    return inst.n / 2;
}

Graph witness_matching(int n) {
    if (n < 1) throw InvalidArgument("witness_matching needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; v += 2) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph witness_clique_plus_isolates(int s, int n) {
    if (s < 1) throw InvalidArgument("witness_clique_plus_isolates needs s >= 1");
    if (n < 2 * s - 1) throw InvalidArgument("witness_clique_plus_isolates needs n >= 2s-1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < 2 * s - 1; ++u)
        for (Vertex v = u + 1; v < 2 * s - 1; ++v) b.add_edge(u, v);
    return std::move(b).build();
}

int brute_force_turind(const TuranInstance& inst) {
    inst.validate();
    const int n = inst.n;
    if (n > kOracleMaxVertices) {
        throw SizeLimitExceeded("brute_force_turind supports n <= " +
                                std::to_string(kOracleMaxVertices));
    }
    const Pattern p = pattern_of(inst);
    std::vector<std::vector<int>> earlier(p.vertices);
    for (auto [a, b] : p.edges) earlier[std::max(a, b)].push_back(std::min(a, b));

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int slots = static_cast<int>(pairs.size());
    const std::uint32_t limit = std::uint32_t{1} << slots;

    auto admissible = [&](std::uint32_t mask) {
        Adjacency adj{};
        for (int bit = 0; bit < slots; ++bit) {
            if (mask >> bit & 1) {
                auto [u, v] = pairs[bit];
                adj[u] |= static_cast<std::uint8_t>(1u << v);
                adj[v] |= static_cast<std::uint8_t>(1u << u);
            }
        }
        if (has_induced_star(n, inst.t, adj)) return false;
        if (p.vertices > n) return true;
        std::array<int, kOracleMaxVertices> image{};
        return !embeds(p, earlier, 0, image, 0, n, adj);
    };

    // Scan edge counts from the top; the first admissible graph is extremal.
    for (int e = slots; e > 0; --e) {
        std::uint32_t mask = (std::uint32_t{1} << e) - 1;
        while (mask < limit) {
            if (admissible(mask)) return e;
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    return 0;
}

}  // namespace clf
