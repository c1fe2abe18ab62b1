#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/euclid.hpp"
#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/quotients.hpp"
#include "hankel/rational_function.hpp"

namespace hankel {

template <Field F>
struct HankelReport {
    std::vector<F> dets;              // H_1 .. H_n
    std::vector<int> nonzero_indices; // 1-based positions with H != 0
    std::optional<int> kronecker;     // absent for truncated-series input
};

// The (f0, f1) pair whose generalized Sturm sequence carries the Hankel
// data of h = N/D: with nu = deg N - deg D + 1,
//   nu <  0:  f0 = rev(D),        f1 = x^{-nu} rev(N)
//   nu >= 0:  f0 = x^{nu} rev(D), f1 = rev(N)
// Then deg f0 - deg f1 = k + 1 (k the valuation of h), gcd(f0, f1) = 1 and
// x^{m_0 - 1} rev(f1)/rev(f0) = h.
template <Field F>
std::pair<Poly<F>, Poly<F>> construct_f0_f1(const RationalFunction<F>& h) {
    if (h.is_zero()) throw std::domain_error("zero numerator");
    if (!h.is_power_series())
        throw std::domain_error("not a power series: denominator vanishes at 0");
    const int nu = h.num().degree() - h.den().degree() + 1;
    const Poly<F> rev_d = reverse(h.den());
    const Poly<F> rev_n = reverse(h.num());
    if (nu < 0)
        return {rev_d, rev_n.shifted_up(static_cast<std::size_t>(-nu))};
    return {rev_d.shifted_up(static_cast<std::size_t>(nu)), rev_n};
}

// d = max(deg N + 1, deg D) for reduced h: H_d != 0 and H_t = 0 for t > d.
// A zero numerator gives d = 0 (every determinant vanishes).
template <Field F>
int kronecker_bound(const RationalFunction<F>& h) {
    if (h.is_zero()) return 0;
    return std::max(h.num().degree() + 1, h.den().degree());
}

namespace detail {

template <Field F>
void require_coverage(const QuotientSequence<F>& q, int r) {
    if (!q.exhausted && q.covered() < r)
        throw std::domain_error("need more quotient steps: have degree " +
                                std::to_string(q.covered()) + ", need " + std::to_string(r));
}

}  // namespace detail

// Closed form for a single determinant of S_{f0,f1}. If r is the prefix sum
// m_0 + ... + m_{kappa-1}:
//   H_r = (-1)^{sum m_i (m_i - 1)/2}
//         / (prod_{i<=kappa-2} b_i^{2(r - sum_{j<i} m_j) - m_i} * b_{kappa-1}^{m_{kappa-1}}),
// otherwise H_r = 0.
template <Field F>
F det_closed_form(const QuotientSequence<F>& q, int r) {
    if (r < 1) throw std::domain_error("determinant index must be positive");
    if (q.steps.empty()) throw std::domain_error("empty quotient sequence");
    detail::require_coverage(q, r);
    const F zero = q.steps[0].b.zero();
    int prefix = 0;
    std::size_t kappa = 0;
    bool hit = false;
    for (std::size_t i = 0; i < q.steps.size(); ++i) {
        prefix += q.steps[i].m;
        if (prefix == r) {
            kappa = i + 1;
            hit = true;
            break;
        }
        if (prefix > r) break;
    }
    if (!hit) return zero;
    long long sign_exp = 0;
    for (std::size_t i = 0; i < kappa; ++i)
        sign_exp += static_cast<long long>(q.steps[i].m) * (q.steps[i].m - 1) / 2;
    F denom = q.steps[0].b.one();
    int before = 0;  // sum_{j<i} m_j
    for (std::size_t i = 0; i + 1 < kappa; ++i) {
        const std::uint64_t e = static_cast<std::uint64_t>(2 * (r - before) - q.steps[i].m);
        denom = denom * field_pow(q.steps[i].b, e);
        before += q.steps[i].m;
    }
    denom = denom * field_pow(q.steps[kappa - 1].b,
                              static_cast<std::uint64_t>(q.steps[kappa - 1].m));
    F value = denom.inv();
    if (sign_exp % 2 != 0) value = -value;
    return value;
}

// H_1 .. H_n by the recursion: H_0 = 1, zeros strictly between prefix sums,
// and at each prefix sum
//   H_{r+m} = (-1)^{m(m-1)/2} (b_kappa * prod_{i<kappa} b_i^2)^{-m} H_r.
// The running product is maintained with two multiplications per step and
// its m-th power taken by binary exponentiation.
template <Field F>
std::vector<F> dets_from_quotients(const QuotientSequence<F>& q, int n) {
    if (n < 1) throw std::domain_error("determinant count must be positive");
    if (q.steps.empty()) throw std::domain_error("empty quotient sequence");
    detail::require_coverage(q, std::min(n, q.deg_f0));
    const F zero = q.steps[0].b.zero();
    std::vector<F> out(static_cast<std::size_t>(n), zero);
    F h = q.steps[0].b.one();  // H_0 = 1
    F running = h;             // b_kappa * prod_{i<kappa} b_i^2
    int r = 0;
    for (std::size_t kappa = 0; kappa < q.steps.size() && r < n; ++kappa) {
        const QuotientStep<F>& step = q.steps[kappa];
        running = kappa == 0 ? step.b : running * q.steps[kappa - 1].b * step.b;
        h = field_pow(running.inv(), static_cast<std::uint64_t>(step.m)) * h;
        if ((static_cast<long long>(step.m) * (step.m - 1) / 2) % 2 != 0) h = -h;
        r += step.m;
        if (r <= n) out[static_cast<std::size_t>(r - 1)] = h;
    }
    return out;
}

// Algorithm steps: construct (f0, f1), cap the work at the Kronecker bound,
// extract quotients by half-GCD, then run the determinant recursion.
template <Field F>
HankelReport<F> comp_hd(const RationalFunction<F>& h, int n) {
    if (n < 1) throw std::domain_error("determinant count must be positive");
    if (!h.is_power_series())
        throw std::domain_error("not a power series: denominator vanishes at 0");
    HankelReport<F> report;
    const F zero = h.den().lead().zero();
    report.dets.assign(static_cast<std::size_t>(n), zero);
    report.kronecker = kronecker_bound(h);
    if (h.is_zero()) return report;
    const int d = *report.kronecker;
    const int n_eff = std::min(n, d);
    auto [f0, f1] = construct_f0_f1(h);
    const QuotientSequence<F> q = half_gcd_quotients(f0, f1, n_eff);
    const std::vector<F> dets = dets_from_quotients(q, n_eff);
    for (int i = 0; i < n_eff; ++i) report.dets[static_cast<std::size_t>(i)] = dets[i];
    for (int i = 1; i <= n; ++i)
        if (!report.dets[static_cast<std::size_t>(i - 1)].is_zero())
            report.nonzero_indices.push_back(i);
    return report;
}

// Determinants of a truncated series: the first n Hankel determinants only
// depend on h_0 .. h_{2n-2}, so the truncation is treated as a polynomial
// numerator over the constant denominator 1.
template <Field F>
HankelReport<F> comp_hd_series(std::span<const F> coeffs, int n) {
    if (n < 1) throw std::domain_error("determinant count must be positive");
    const std::size_t required = static_cast<std::size_t>(2 * n - 1);
    if (coeffs.size() < required)
        throw std::domain_error("need at least 2n-1 = " + std::to_string(required) +
                                " coefficients, got " + std::to_string(coeffs.size()));
    std::vector<F> window(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(required));
    const F one = window[0].one();
    Poly<F> num{std::move(window)};
    HankelReport<F> report;
    if (num.is_zero()) {
        report.dets.assign(static_cast<std::size_t>(n), one.zero());
        report.kronecker = std::nullopt;
        return report;
    }
    report = comp_hd(RationalFunction<F>(std::move(num), Poly<F>::constant(one)), n);
    report.kronecker = std::nullopt;
    return report;
}

}  // namespace hankel
