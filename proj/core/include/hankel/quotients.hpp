#pragma once

#include <numeric>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

// One step of the negated-remainder chain f_i = B_i * f_{i+1} - f_{i+2}:
// the quotient B_i, its true leading coefficient b_i and its degree m_i.
template <Field F>
struct QuotientStep {
    Poly<F> B;
    F b;
    int m;
};

// The quotient data extracted from a generalized Sturm sequence — the sole
// input the determinant formulas need.
template <Field F>
struct QuotientSequence {
    std::vector<QuotientStep<F>> steps;
    int deg_f0 = 0;
    int deg_f1 = 0;
    // True when the chain ran to the gcd, so no further steps exist and
    // every index beyond covered() is known to have a zero determinant.
    bool exhausted = false;

    int covered() const {
        int c = 0;
        for (const auto& s : steps) c += s.m;
        return c;
    }

    // Cumulative degree sums m_0, m_0+m_1, ... — the nonzero determinant
    // positions.
    std::vector<int> prefix_sums() const {
        std::vector<int> out;
        out.reserve(steps.size());
        int c = 0;
        for (const auto& s : steps) {
            c += s.m;
            out.push_back(c);
        }
        return out;
    }
};

}  // namespace hankel
