#include "clf/finite_field.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "clf/errors.hpp"

namespace clf {

namespace {

struct FieldShape {
    int p;
    int e;
    // Coefficients c_0..c_{e-1} of x^e = -(c_0 + c_1 x + ...), i.e. the
    // monic irreducible is x^e + c_{e-1} x^{e-1} + ... + c_0.
    std::array<int, 3> low;
};

std::optional<FieldShape> shape_of(int q) {
    switch (q) {
        case 2: return FieldShape{2, 1, {0, 0, 0}};
        case 3: return FieldShape{3, 1, {0, 0, 0}};
        case 5: return FieldShape{5, 1, {0, 0, 0}};
        case 7: return FieldShape{7, 1, {0, 0, 0}};
        case 4: return FieldShape{2, 2, {1, 1, 0}};  // x^2 + x + 1
        case 8: return FieldShape{2, 3, {1, 1, 0}};  // x^3 + x + 1
        case 9: return FieldShape{3, 2, {1, 0, 0}};  // x^2 + 1
        default: return std::nullopt;
    }
}

std::vector<int> digits(int x, const FieldShape& s) {
    std::vector<int> d(s.e);
    for (int i = 0; i < s.e; ++i, x /= s.p) d[i] = x % s.p;
    return d;
}

int from_digits(const std::vector<int>& d, const FieldShape& s) {
    int x = 0;
    for (int i = s.e - 1; i >= 0; --i) x = x * s.p + d[i];
    return x;
}

}  // namespace

bool FiniteField::supported(int order) {
    return shape_of(order).has_value();
}

const FiniteField& FiniteField::get(int order) {
    static std::mutex lock;
    static std::map<int, FiniteField> cache;
    std::lock_guard guard(lock);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, FiniteField(order)).first;
    return it->second;
}

FiniteField::FiniteField(int order) : q_(order) {
    const auto shape = shape_of(order);
    if (!shape) {
        throw InvalidArgument("unsupported field order " + std::to_string(order) +
                              " (supported: 2, 3, 4, 5, 7, 8, 9)");
    }
    const auto& s = *shape;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        const auto da = digits(a, s);
        for (int b = 0; b < q_; ++b) {
            const auto db = digits(b, s);
            std::vector<int> sum(s.e);
            for (int i = 0; i < s.e; ++i) sum[i] = (da[i] + db[i]) % s.p;
            add_[a * q_ + b] = from_digits(sum, s);

            std::vector<int> prod(2 * s.e - 1, 0);
            for (int i = 0; i < s.e; ++i)
                for (int j = 0; j < s.e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
            // Reduce from the top degree down using x^e = -(low).
            for (int deg = 2 * s.e - 2; deg >= s.e; --deg) {
                const int c = prod[deg];
                if (c == 0) continue;
                prod[deg] = 0;
                for (int i = 0; i < s.e; ++i) {
                    const int shift = deg - s.e + i;
                    prod[shift] = ((prod[shift] - c * s.low[i]) % s.p + s.p) % s.p;
                }
            }
            prod.resize(s.e);
            mul_[a * q_ + b] = from_digits(prod, s);
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) == 0) neg_[a] = b;
            if (a != 0 && mul(a, b) == 1) inv_[a] = b;
        }
    }
    check_axioms();
}

void FiniteField::check_axioms() const {
    auto fail = [&](const char* what) {
        throw IntegrityError("GF(" + std::to_string(q_) + ") table violates " + what);
    };
    for (int a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a) fail("identity");
        if (add(a, neg(a)) != 0) fail("additive inverse");
        if (a != 0 && mul(a, inv(a)) != 1) fail("multiplicative inverse");
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
            }
        }
    }
}

}  // namespace clf
