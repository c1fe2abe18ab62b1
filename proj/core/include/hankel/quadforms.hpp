#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/euclid.hpp"
#include "hankel/hankel_dets.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/rational.hpp"
#include "hankel/rational_function.hpp"

namespace hankel {

// Evaluation point of a sign-variation count: a rational number or a
// symbolic infinity (evaluated through leading coefficients, never through
// a large substitute value).
struct EvalPoint {
    enum class Kind { minus_infinity, finite, plus_infinity };
    Kind kind = Kind::finite;
    Rational value;

    static EvalPoint minus_inf() { return {Kind::minus_infinity, Rational()}; }
    static EvalPoint plus_inf() { return {Kind::plus_infinity, Rational()}; }
    static EvalPoint at(Rational v) { return {Kind::finite, std::move(v)}; }

    std::string to_string() const {
        switch (kind) {
            case Kind::minus_infinity: return "-inf";
            case Kind::plus_infinity: return "+inf";
            default: return value.to_string();
        }
    }
};

struct SignVariationCount {
    EvalPoint at;
    int count = 0;
};

struct SignatureResult {
    enum class Method { frobenius, sturm_variation, oracle };
    int signature = 0;
    int order = 0;
    Method method = Method::frobenius;
};

namespace detail {

inline int sign_at(const Poly<Rational>& f, const EvalPoint& p) {
    if (f.is_zero()) return 0;
    switch (p.kind) {
        case EvalPoint::Kind::plus_infinity:
            return f.lead().sign();
        case EvalPoint::Kind::minus_infinity:
            return f.degree() % 2 == 0 ? f.lead().sign() : -f.lead().sign();
        default:
            return f.eval(p.value).sign();
    }
}

}  // namespace detail

// Sign changes across the chain evaluated at the point, zeros dropped.
inline SignVariationCount sign_variations(const std::vector<Poly<Rational>>& chain,
                                          const EvalPoint& at) {
    int count = 0;
    int last = 0;
    for (const auto& f : chain) {
        const int s = detail::sign_at(f, at);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return {at, count};
}

namespace detail {

inline void require_squarefree(const Poly<Rational>& f) {
    if (f.degree() < 1) return;
    const Poly<Rational> g = poly_gcd(f, f.derivative());
    if (g.degree() > 0)
        throw std::domain_error("polynomial is not squarefree: gcd(f, f') = " + g.to_string());
}

}  // namespace detail

// Sturm's theorem: the number of real roots of squarefree f in (a, b] is
// V(a) - V(b) on the generalized Sturm sequence of (f, f').
inline int count_real_roots_sturm(const Poly<Rational>& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw std::domain_error("root counting needs a nonzero polynomial");
    if (!(a < b)) throw std::domain_error("interval endpoints must satisfy a < b");
    if (f.eval(a).is_zero() || f.eval(b).is_zero())
        throw std::domain_error("endpoint is a root");
    if (f.degree() < 1) return 0;
    detail::require_squarefree(f);
    const SturmChain<Rational> sc = sturm_chain_classical(f, f.derivative());
    const int va = sign_variations(sc.chain, EvalPoint::at(a)).count;
    const int vb = sign_variations(sc.chain, EvalPoint::at(b)).count;
    return va - vb;
}

// The power-sum generating series of f's roots: rev(f')/rev(f) for monic f,
// whose expansion is sum_k p_k x^k with p_k = sum_i s_i^k.
inline RationalFunction<Rational> power_sum_series(const Poly<Rational>& f) {
    if (f.degree() < 1) throw std::domain_error("power sums need a positive-degree polynomial");
    const Poly<Rational> monic = f.lead().is_one() ? f : f.scaled(f.lead().inv());
    return RationalFunction<Rational>(reverse(monic.derivative()), reverse(monic));
}

// Frobenius' rule for a nonsingular Hankel matrix from its sequential
// principal minors H_0 = 1, H_1, ..., H_n: with nonzero indices
// r_0 = 0 < r_1 < ... < r_s = n, each consecutive pair contributes
// (-1)^{(gap-1)/2} sign(H_{r_i}/H_{r_{i-1}}) when the gap is odd, else 0.
inline SignatureResult frobenius_signature(const std::vector<Rational>& minors) {
    if (minors.empty() || !minors[0].is_one())
        throw std::domain_error("minor sequence must start with H_0 = 1");
    const int n = static_cast<int>(minors.size()) - 1;
    if (n < 1) throw std::domain_error("need at least H_1");
    if (minors.back().is_zero())
        throw std::domain_error("singular; Frobenius rule requires nonsingular H_n");
    int signature = 0;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        if (minors[static_cast<std::size_t>(i)].is_zero()) continue;
        const int gap = i - prev;
        if (gap % 2 == 1) {
            int term = minors[static_cast<std::size_t>(i)].sign() *
                       minors[static_cast<std::size_t>(prev)].sign();
            if (((gap - 1) / 2) % 2 != 0) term = -term;
            signature += term;
        }
        prev = i;
    }
    return {signature, n, SignatureResult::Method::frobenius};
}

// Signature of the order-n Hankel matrix of h through the quotient chain:
// with t the index where m_0 + ... + m_t = n, the signature is
// sum of sign(b_i) over 0 <= i <= t with m_i odd.
//
// The sum uses b_i (not b_{i+1}) and starts at i = 0; this convention is
// forced by the determinant recursion: for odd m the Frobenius factor
// (-1)^{(m-1)/2} times the ratio sign (-1)^{m(m-1)/2} sign(b^m) collapses to
// sign(b) because (m^2-1)/2 is even for every odd m. Every call is
// cross-checked against the Frobenius rule and fails loudly on mismatch.
inline SignatureResult signature_via_sturm(const RationalFunction<Rational>& h, int n) {
    if (n < 1) throw std::domain_error("order must be positive");
    if (h.is_zero() || n > kronecker_bound(h))
        throw std::domain_error("singular Hankel matrix");
    auto [f0, f1] = construct_f0_f1(h);
    const QuotientSequence<Rational> q = half_gcd_quotients(f0, f1, n);
    int signature = 0;
    int prefix = 0;
    bool reached = false;
    for (const auto& step : q.steps) {
        prefix += step.m;
        if (step.m % 2 == 1) signature += step.b.sign();
        if (prefix >= n) {
            reached = prefix == n;
            break;
        }
    }
    if (!reached) throw std::domain_error("singular Hankel matrix");
    std::vector<Rational> minors{Rational(1)};
    for (auto& d : dets_from_quotients(q, n)) minors.push_back(std::move(d));
    const SignatureResult cross = frobenius_signature(minors);
    if (cross.signature != signature)
        throw std::logic_error("signature methods disagree: sturm-variation " +
                               std::to_string(signature) + " vs frobenius " +
                               std::to_string(cross.signature));
    return {signature, n, SignatureResult::Method::sturm_variation};
}

// Borchardt: the signature of the power-sum Hankel matrix of a squarefree f
// equals its number of distinct real roots; nonsingularity is automatic.
inline int count_real_roots_hankel(const Poly<Rational>& f) {
    if (f.degree() < 1) throw std::domain_error("root counting needs positive degree");
    detail::require_squarefree(f);
    return signature_via_sturm(power_sum_series(f), f.degree()).signature;
}

}  // namespace hankel
