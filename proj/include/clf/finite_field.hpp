#pragma once

#include <vector>

namespace clf {

/// GF(q) for q in {2, 3, 4, 5, 7, 8, 9}. Elements are 0..q-1; for prime
/// powers p^e an element is the base-p digit vector of its polynomial
/// coefficients (constant term least significant). Tables are built once per
/// order and checked against the field axioms by exhaustion.
class FiniteField {
public:
    static const FiniteField& get(int order);
    static bool supported(int order);

    int order() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    // Multiplicative inverse of a nonzero element.
    int inv(int a) const { return inv_[a]; }

private:
    explicit FiniteField(int order);
    void check_axioms() const;

    int q_;
    std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace clf
