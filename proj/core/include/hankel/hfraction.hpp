#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/quotients.hpp"

namespace hankel {

// One level of an H-continued fraction: numerator constant v_j, power k_j,
// and the polynomial u_{j+1} of the denominator 1 + u_{j+1}(x) * x below it.
template <Field F>
struct HLevel {
    F v;
    int k = 0;
    Poly<F> u;
};

// Super continued fraction with delta = 2 (the H-fraction):
//
//            v_0 x^{k_0}
//   -------------------------------
//   1 + u_1(x) x  -  v_1 x^{k_0+k_1+2}
//                    ----------------
//                    1 + u_2(x) x - ...
//
// Invariants: every v_j != 0 and deg(u_j) <= k_{j-1} (= k_{j-1} + delta - 2).
template <Field F>
struct HFraction {
    static constexpr int delta = 2;
    std::vector<HLevel<F>> levels;
};

// The H-fraction attached to a quotient sequence: k_j = m_j - 1,
// v_0 = 1/b_0, v_j = 1/(b_{j-1} b_j), and 1 + u_{j+1}(x) x = rev(B_j)/b_j
// (well defined: the constant term of rev(B_j) is exactly b_j).
template <Field F>
HFraction<F> to_h_fraction(const QuotientSequence<F>& quotients) {
    HFraction<F> out;
    out.levels.reserve(quotients.steps.size());
    for (std::size_t j = 0; j < quotients.steps.size(); ++j) {
        const QuotientStep<F>& step = quotients.steps[j];
        HLevel<F> level;
        level.k = step.m - 1;
        level.v = j == 0 ? step.b.inv() : (quotients.steps[j - 1].b * step.b).inv();
        const Poly<F> scaled = reverse(step.B).scaled(step.b.inv());
        assert(scaled[0].is_one());
        level.u = scaled.quo_x(1);
        out.levels.push_back(std::move(level));
    }
    return out;
}

namespace detail {

// 1 / f mod x^order for a series with unit constant term, by the direct
// recurrence (these series stay short; no need for Newton here).
template <Field F>
std::vector<F> series_inverse_unit(const std::vector<F>& f, std::size_t order) {
    const F zero = f[0].zero();
    std::vector<F> g(order, zero);
    const F f0inv = f[0].inv();
    g[0] = f0inv;
    for (std::size_t j = 1; j < order; ++j) {
        F acc = zero;
        const std::size_t lim = std::min(j, f.size() - 1);
        for (std::size_t i = 1; i <= lim; ++i) acc = acc - f[i] * g[j - i];
        g[j] = acc * f0inv;
    }
    return g;
}

}  // namespace detail

// Bottom-up evaluation of the finite fraction as a power series mod x^order.
// The empty fraction is the zero series.
template <Field F>
std::vector<F> expand_h_fraction(const HFraction<F>& hf, std::size_t order) {
    if (order == 0) return {};
    if (hf.levels.empty()) return std::vector<F>(order, F{});
    const F zero = hf.levels[0].v.zero();
    const F one = hf.levels[0].v.one();
    std::vector<F> tail(order, zero);
    for (std::size_t j = hf.levels.size(); j-- > 0;) {
        const HLevel<F>& level = hf.levels[j];
        // denominator 1 + u_{j+1}(x) x - tail
        std::vector<F> den(order, zero);
        den[0] = one;
        for (std::size_t i = 0; i < level.u.size() && i + 1 < order; ++i)
            den[i + 1] = den[i + 1] + level.u[i];
        for (std::size_t i = 0; i < order; ++i) den[i] = den[i] - tail[i];
        const std::vector<F> inv = detail::series_inverse_unit(den, order);
        const std::size_t e = static_cast<std::size_t>(
            j == 0 ? level.k : hf.levels[j - 1].k + level.k + HFraction<F>::delta);
        std::vector<F> next(order, zero);
        for (std::size_t i = 0; i + e < order; ++i) next[i + e] = level.v * inv[i];
        tail = std::move(next);
    }
    return tail;
}

// All Hankel determinants of the fraction's series:
//   H_{s_j} = (-1)^eps v_0^{s_j} v_1^{s_j-s_1} ... v_{j-1}^{s_j-s_{j-1}},
// with eps = sum k_i (k_i+1)/2 over i < j and s_j = k_0+...+k_{j-1}+j;
// every other index is zero.
template <Field F>
std::vector<F> dets_from_hfraction(const HFraction<F>& hf, int n) {
    if (n < 1) throw std::domain_error("determinant count must be positive");
    if (hf.levels.empty()) return std::vector<F>(static_cast<std::size_t>(n), F{});
    const F zero = hf.levels[0].v.zero();
    std::vector<F> out(static_cast<std::size_t>(n), zero);
    std::vector<int> s{0};  // s_0 = 0
    long long eps = 0;
    for (std::size_t j = 1; j <= hf.levels.size(); ++j) {
        const int kj = hf.levels[j - 1].k;
        s.push_back(s.back() + kj + 1);
        eps += static_cast<long long>(kj) * (kj + 1) / 2;
        const int sj = s.back();
        if (sj > n) break;
        F value = hf.levels[0].v.one();
        for (std::size_t i = 0; i < j; ++i)
            value = value * field_pow(hf.levels[i].v, static_cast<std::uint64_t>(sj - s[i]));
        if (eps % 2 != 0) value = -value;
        out[static_cast<std::size_t>(sj - 1)] = value;
    }
    return out;
}

}  // namespace hankel
