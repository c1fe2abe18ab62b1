#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/quotients.hpp"

namespace hankel {

namespace detail {

template <Field F>
void check_chain_inputs(const Poly<F>& f0, const Poly<F>& f1) {
    if (f0.is_zero() || f1.is_zero())
        throw std::domain_error("Sturm chain needs two nonzero polynomials");
    if (f0.degree() <= f1.degree())
        throw std::domain_error("Sturm chain needs deg(f0) > deg(f1)");
}

// Converts standard Euclidean quotients q_i (from r_{i+1} = r_{i-1} - q_i r_i)
// into the quotients of the negated-remainder chain. Writing f_i = s_i r_i
// with s_0 = s_1 = 1 forces s_{i+2} = -s_i, hence B_i = (-1)^i q_i.
template <Field F>
QuotientSequence<F> to_negated_chain(std::vector<Poly<F>> std_quots, int deg_f0, int deg_f1,
                                     bool exhausted) {
    QuotientSequence<F> out;
    out.deg_f0 = deg_f0;
    out.deg_f1 = deg_f1;
    out.exhausted = exhausted;
    out.steps.reserve(std_quots.size());
    for (std::size_t i = 0; i < std_quots.size(); ++i) {
        Poly<F> B = (i % 2 == 0) ? std::move(std_quots[i]) : -std_quots[i];
        F b = B.lead();
        const int m = B.degree();
        out.steps.push_back(QuotientStep<F>{std::move(B), std::move(b), m});
    }
    return out;
}

template <Field F>
struct Mat2 {
    Poly<F> m00, m01, m10, m11;

    static Mat2 identity(const F& one) {
        return Mat2{Poly<F>::constant(one), Poly<F>{}, Poly<F>{}, Poly<F>::constant(one)};
    }
};

// [[0, 1], [1, -q]], the transition attached to one division step.
template <Field F>
Mat2<F> quotient_matrix(const Poly<F>& q, const F& one) {
    return Mat2<F>{Poly<F>{}, Poly<F>::constant(one), Poly<F>::constant(one), -q};
}

template <Field F>
Mat2<F> mat_mul(const Mat2<F>& a, const Mat2<F>& b) {
    return Mat2<F>{a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                   a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

template <Field F>
std::pair<Poly<F>, Poly<F>> mat_apply(const Mat2<F>& m, const Poly<F>& v0, const Poly<F>& v1) {
    return {m.m00 * v0 + m.m01 * v1, m.m10 * v0 + m.m11 * v1};
}

template <Field F>
struct HgcdResult {
    Mat2<F> M;
    std::vector<Poly<F>> qs;
};

// Maximal prefix of the standard Euclidean quotients of (a, b) whose degree
// sum stays <= k, together with the matrix mapping (a, b) to the remainder
// pair reached after those steps. Divide and conquer: the first half of the
// quotients only depends on the top 2*ceil(k/2) coefficients.
template <Field F>
HgcdResult<F> hgcd_rec(const Poly<F>& a, const Poly<F>& b, int k) {
    const F one = a.lead().one();
    HgcdResult<F> res{Mat2<F>::identity(one), {}};
    if (b.is_zero() || a.degree() - b.degree() > k) return res;
    if (a.degree() <= static_cast<int>(tuning::half_gcd_threshold)) {
        Poly<F> r0 = a, r1 = b;
        int used = 0;
        while (!r1.is_zero()) {
            const int dq = r0.degree() - r1.degree();
            if (used + dq > k) break;
            auto [q, r] = divrem(r0, r1);
            res.M = mat_mul(quotient_matrix(q, one), res.M);
            res.qs.push_back(std::move(q));
            used += dq;
            r0 = std::move(r1);
            r1 = std::move(r);
        }
        return res;
    }

    const int k1 = (k + 1) / 2;
    const int h1 = std::max(a.degree() - 2 * k1, 0);
    HgcdResult<F> first = hgcd_rec(a.quo_x(static_cast<std::size_t>(h1)),
                                   b.quo_x(static_cast<std::size_t>(h1)), k1);
    Poly<F> s0 = a, s1 = b;
    if (!first.qs.empty()) {
        std::tie(s0, s1) = mat_apply(first.M, a, b);
        res.M = std::move(first.M);
        res.qs = std::move(first.qs);
    }
    int consumed = a.degree() - s0.degree();
    if (s1.is_zero()) return res;
    if (consumed + (s0.degree() - s1.degree()) > k) return res;

    auto [q, r] = divrem(s0, s1);
    res.M = mat_mul(quotient_matrix(q, one), res.M);
    consumed += q.degree();
    res.qs.push_back(std::move(q));
    s0 = std::move(s1);
    s1 = std::move(r);
    if (s1.is_zero() || consumed >= k) return res;

    const int k2 = k - consumed;
    const int h2 = std::max(s0.degree() - 2 * k2, 0);
    HgcdResult<F> second = hgcd_rec(s0.quo_x(static_cast<std::size_t>(h2)),
                                    s1.quo_x(static_cast<std::size_t>(h2)), k2);
    if (!second.qs.empty()) {
        res.M = mat_mul(second.M, res.M);
        for (auto& sq : second.qs) res.qs.push_back(std::move(sq));
    }
    return res;
}

}  // namespace detail

template <Field F>
struct SturmChain {
    std::vector<Poly<F>> chain;  // f_0, ..., f_{s+1} with f_{s+1} = 0
    QuotientSequence<F> quotients;
};

// The generalized Sturm sequence by explicit division:
// f_{i+2} = B_i * f_{i+1} - f_i with B_i = quo(f_i, f_{i+1}).
template <Field F>
SturmChain<F> sturm_chain_classical(const Poly<F>& f0, const Poly<F>& f1) {
    detail::check_chain_inputs(f0, f1);
    SturmChain<F> out;
    out.chain.push_back(f0);
    out.chain.push_back(f1);
    out.quotients.deg_f0 = f0.degree();
    out.quotients.deg_f1 = f1.degree();
    out.quotients.exhausted = true;
    while (!out.chain.back().is_zero()) {
        const Poly<F>& a = out.chain[out.chain.size() - 2];
        const Poly<F>& b = out.chain.back();
        auto [q, r] = divrem(a, b);
        F b_lead = q.lead();
        const int m = q.degree();
        out.quotients.steps.push_back(QuotientStep<F>{std::move(q), std::move(b_lead), m});
        out.chain.push_back(-r);
    }
    return out;
}

// Same quotient list as sturm_chain_classical, computed by divide-and-conquer
// on 2x2 transition matrices without materializing the remainders. Extraction
// stops at the first step whose cumulative degree reaches `need` (the whole
// sequence is returned when it ends sooner).
template <Field F>
QuotientSequence<F> half_gcd_quotients(const Poly<F>& f0, const Poly<F>& f1, int need) {
    detail::check_chain_inputs(f0, f1);
    std::vector<Poly<F>> std_quots;
    Poly<F> a = f0, b = f1;
    int consumed = 0;
    while (!b.is_zero() && consumed < need) {
        detail::HgcdResult<F> sub = detail::hgcd_rec(a, b, need - consumed);
        if (!sub.qs.empty()) {
            auto [na, nb] = detail::mat_apply(sub.M, a, b);
            for (const auto& q : sub.qs) consumed += q.degree();
            for (auto& q : sub.qs) std_quots.push_back(std::move(q));
            a = std::move(na);
            b = std::move(nb);
        } else {
            // The next quotient crosses the budget; take it explicitly so the
            // covered degree always reaches `need` unless the chain ends.
            auto [q, r] = divrem(a, b);
            consumed += q.degree();
            std_quots.push_back(std::move(q));
            a = std::move(b);
            b = std::move(r);
        }
    }
    return detail::to_negated_chain(std::move(std_quots), f0.degree(), f1.degree(),
                                    b.is_zero());
}

}  // namespace hankel
