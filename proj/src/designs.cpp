#include "clf/designs.hpp"

#include <algorithm>
#include <numeric>

#include "clf/errors.hpp"
#include "clf/finite_field.hpp"
#include "clf/rng.hpp"

namespace clf {

namespace {

DesignSystem make_design(DesignKind kind, int points, int k, std::vector<HyperEdge> blocks) {
    DesignSystem d{kind, points, k, make_hypergraph(points, std::move(blocks))};
    if (!is_steiner_system(d.blocks, k)) {
        throw IntegrityError("generated blocks do not form S(2," + std::to_string(k) + "," +
                             std::to_string(points) + ")");
    }
    return d;
}

const FiniteField& field_or_throw(int q) {
    if (!FiniteField::supported(q)) {
        throw InvalidArgument("unsupported field order " + std::to_string(q) +
                              " (supported: 2, 3, 4, 5, 7, 8, 9)");
    }
    return FiniteField::get(q);
}

// Nonzero vectors of F_q^dim whose first nonzero coordinate is 1, in
// lexicographic order.
std::vector<std::vector<int>> normalized_vectors(int q, int dim) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(dim, 0);
    // Lexicographic order: more leading zeros first.
    for (int lead = dim - 1; lead >= 0; --lead) {
        const int free = dim - lead - 1;
        int total = 1;
        for (int i = 0; i < free; ++i) total *= q;
        for (int code = 0; code < total; ++code) {
            std::fill(x.begin(), x.end(), 0);
            x[lead] = 1;
            int c = code;
            for (int i = dim - 1; i > lead; --i, c /= q) x[i] = c % q;
            out.push_back(x);
        }
    }
    return out;
}

int checked_power(int base, int exp, int limit) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        v *= base;
        if (v > limit) return -1;
    }
    return static_cast<int>(v);
}

}  // namespace

std::string to_string(DesignKind kind) {
    switch (kind) {
        case DesignKind::SteinerTriple: return "sts";
        case DesignKind::Projective: return "projective";
        case DesignKind::Affine: return "affine";
    }
    return {};
}

bool is_steiner_system(const Hypergraph& h, int k) {
    const int v = h.vertex_count();
    std::vector<char> covered(static_cast<std::size_t>(v) * v, 0);
    for (const auto& e : h.edges()) {
        if (static_cast<int>(e.size()) != k) return false;
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto& cell = covered[static_cast<std::size_t>(e[a]) * v + e[b]];
                if (cell) return false;
                cell = 1;
            }
        }
    }
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            if (!covered[static_cast<std::size_t>(a) * v + b]) return false;
    return true;
}

DesignSystem fano() {
    std::vector<HyperEdge> blocks;
    for (int i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return make_design(DesignKind::SteinerTriple, 7, 3, std::move(blocks));
}

DesignSystem steiner_triple(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3)) {
        throw InvalidArgument("no Steiner triple system on " + std::to_string(v) +
                              " points (need v = 1 or 3 mod 6, v >= 7)");
    }
    std::vector<HyperEdge> blocks;
    if (v % 6 == 3) {
        // Bose: idempotent commutative quasigroup x o y = (x+y)/2 on Z_order.
        const int order = v / 3;
        const int half = (order + 1) / 2;
        auto point = [&](int x, int i) { return i * order + x; };
        auto op = [&](int x, int y) { return (x + y) * half % order; };
        for (int x = 0; x < order; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
        for (int i = 0; i < 3; ++i)
            for (int x = 0; x < order; ++x)
                for (int y = x + 1; y < order; ++y)
                    blocks.push_back({point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)});
    } else {
        // Skolem: half-idempotent commutative quasigroup on Z_{2n}, point
        // v-1 plays the role of infinity.
        const int n = (v - 1) / 6;
        const int order = 2 * n;
        const int infinity = v - 1;
        auto point = [&](int x, int i) { return i * order + x; };
        auto op = [&](int x, int y) {
            const int s = (x + y) % order;
            return s % 2 == 0 ? s / 2 : n + s / 2;
        };
        for (int x = 0; x < n; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
        for (int i = 0; i < 3; ++i) {
            for (int x = 0; x < n; ++x)
                blocks.push_back({infinity, point(x + n, i), point(x, (i + 1) % 3)});
            for (int x = 0; x < order; ++x)
                for (int y = x + 1; y < order; ++y)
                    blocks.push_back({point(x, i), point(y, i), point(op(x, y), (i + 1) % 3)});
        }
    }
    return make_design(DesignKind::SteinerTriple, v, 3, std::move(blocks));
}

DesignSystem projective_plane(int q) {
    const auto& f = field_or_throw(q);
    const auto pts = normalized_vectors(q, 3);
    std::vector<HyperEdge> blocks;
    for (const auto& line : pts) {
        HyperEdge block;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(line[i], pts[p][i]));
            if (dot == 0) block.push_back(static_cast<Vertex>(p));
        }
        blocks.push_back(std::move(block));
    }
    const int v = q * q + q + 1;
    return make_design(DesignKind::Projective, v, q + 1, std::move(blocks));
}

ParallelClassSet affine_lines(int m, int q) {
    if (m < 2) throw InvalidArgument("affine dimension m must be at least 2");
    const auto& f = field_or_throw(q);
    const int v = checked_power(q, m, kAffinePointLimit);
    if (v < 0) {
        throw SizeLimitExceeded("AG_" + std::to_string(m) + "(" + std::to_string(q) +
                                ") exceeds " + std::to_string(kAffinePointLimit) + " points");
    }
    auto encode = [&](const std::vector<int>& x) {
        int code = 0;
        for (int c : x) code = code * q + c;
        return code;
    };
    std::vector<std::vector<int>> coords(v, std::vector<int>(m));
    for (int p = 0; p < v; ++p) {
        int c = p;
        for (int i = m - 1; i >= 0; --i, c /= q) coords[p][i] = c % q;
    }

    std::vector<std::vector<HyperEdge>> lines_by_class;
    std::vector<HyperEdge> all;
    for (const auto& dir : normalized_vectors(q, m)) {
        std::vector<char> used(v, 0);
        std::vector<HyperEdge> cls;
        for (int p = 0; p < v; ++p) {
            if (used[p]) continue;
            HyperEdge line;
            for (int lambda = 0; lambda < q; ++lambda) {
                std::vector<int> x(m);
                for (int i = 0; i < m; ++i) x[i] = f.add(coords[p][i], f.mul(lambda, dir[i]));
                const int code = encode(x);
                used[code] = 1;
                line.push_back(code);
            }
            std::sort(line.begin(), line.end());
            cls.push_back(line);
            all.push_back(std::move(line));
        }
        lines_by_class.push_back(std::move(cls));
    }

    ParallelClassSet out{make_design(DesignKind::Affine, v, q, std::move(all)), {}};
    const auto& stored = out.design.blocks.edges();
    for (const auto& cls : lines_by_class) {
        std::vector<std::size_t> idx;
        for (const auto& line : cls) {
            auto it = std::lower_bound(stored.begin(), stored.end(), line);
            idx.push_back(static_cast<std::size_t>(it - stored.begin()));
        }
        std::sort(idx.begin(), idx.end());
        out.classes.push_back(std::move(idx));
    }
    return out;
}

Hypergraph take_classes(const ParallelClassSet& p, int count, std::optional<std::uint64_t> seed) {
    const int r = static_cast<int>(p.classes.size());
    if (count < 0 || count > r) {
        throw InvalidArgument("class count " + std::to_string(count) + " outside 0.." +
                              std::to_string(r));
    }
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    if (seed) {
        SplitMix64 rng(*seed);
        rng.shuffle(std::span<int>(order));
    }
    std::vector<HyperEdge> edges;
    for (int c = 0; c < count; ++c)
        for (std::size_t b : p.classes[order[c]]) edges.push_back(p.design.blocks.edge(b));
    return make_hypergraph(p.design.points, std::move(edges));
}

DesignSystem steiner_design(int k, int v) {
    if (k == 3) return v == 7 ? fano() : steiner_triple(v);
    if (k >= 4) {
        if (v == k * k - k + 1 && FiniteField::supported(k - 1)) return projective_plane(k - 1);
        if (FiniteField::supported(k)) {
            for (int m = 2, pw = k * k; pw <= kAffinePointLimit; ++m, pw *= k)
                if (pw == v) return affine_lines(m, k).design;
        }
    }
    throw DesignUnavailable("no generator for S(2," + std::to_string(k) + "," + std::to_string(v) +
                            ")");
}

}  // namespace clf
