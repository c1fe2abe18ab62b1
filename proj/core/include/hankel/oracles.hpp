#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/rational.hpp"

namespace hankel::oracles {

// Slow, independent reference implementations backing the property tests.
// Deliberately O(n^3)..O(n^4); nothing here shares code with the fast path
// beyond basic polynomial arithmetic.

template <Field F>
struct DenseMatrix {
    int n = 0;
    std::vector<F> entries;  // row-major, n*n

    const F& at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
    F& at(int i, int j) { return entries[static_cast<std::size_t>(i * n + j)]; }

    bool symmetric() const {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }
};

// Entry (i, j) = coeffs[i + j].
template <Field F>
DenseMatrix<F> hankel_matrix(std::span<const F> coeffs, int n) {
    if (n < 1) throw std::domain_error("matrix order must be positive");
    if (coeffs.size() < static_cast<std::size_t>(2 * n - 1))
        throw std::domain_error("need at least 2n-1 coefficients for the order-n Hankel matrix");
    DenseMatrix<F> m;
    m.n = n;
    m.entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.entries.push_back(coeffs[static_cast<std::size_t>(i + j)]);
    return m;
}

// Exact determinant by fraction-free (Bareiss) elimination with column
// pivoting; row swaps flip the sign.
template <Field F>
F bareiss_det(DenseMatrix<F> m) {
    if (m.n == 0) throw std::domain_error("empty matrix");
    const F zero = m.entries[0].zero();
    const F one = m.entries[0].one();
    F prev = one;
    bool negate = false;
    for (int k = 0; k + 1 < m.n; ++k) {
        if (m.at(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < m.n; ++i)
                if (!m.at(i, k).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return zero;
            for (int j = 0; j < m.n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        const F prev_inv = prev.inv();
        for (int i = k + 1; i < m.n; ++i)
            for (int j = k + 1; j < m.n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) * prev_inv;
        prev = m.at(k, k);
    }
    const F det = m.at(m.n - 1, m.n - 1);
    return negate ? -det : det;
}

// H_1 .. H_n of the coefficient sequence, each by Bareiss elimination.
template <Field F>
std::vector<F> naive_hankel_dets(std::span<const F> coeffs, int n) {
    std::vector<F> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) out.push_back(bareiss_det(hankel_matrix(coeffs, k)));
    return out;
}

// Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier
// (divisions only by the integers 1..n, exact over the rationals).
inline Poly<Rational> char_poly(const DenseMatrix<Rational>& m) {
    const int n = m.n;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = Rational(1);
    DenseMatrix<Rational> a = m;
    const auto trace = [](const DenseMatrix<Rational>& x) {
        Rational t;
        for (int i = 0; i < x.n; ++i) t += x.at(i, i);
        return t;
    };
    c[static_cast<std::size_t>(n - 1)] = -trace(a);
    for (int k = 2; k <= n; ++k) {
        // a <- m * (a + c_{n-k+1} I)
        DenseMatrix<Rational> shifted = a;
        for (int i = 0; i < n; ++i)
            shifted.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        DenseMatrix<Rational> next;
        next.n = n;
        next.entries.assign(static_cast<std::size_t>(n) * n, Rational());
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m.at(i, l).is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    next.at(i, j) += m.at(i, l) * shifted.at(l, j);
            }
        a = std::move(next);
        c[static_cast<std::size_t>(n - k)] = -(trace(a) / Rational(k));
    }
    return Poly<Rational>(std::move(c));
}

namespace detail {

// Self-contained Sturm count on (a, b] for squarefree s; independent of the
// quadforms implementation on purpose.
inline int sturm_count(const Poly<Rational>& s, const Rational& a, const Rational& b) {
    std::vector<Poly<Rational>> chain{s, s.derivative()};
    while (!chain.back().is_zero()) {
        const auto& f = chain[chain.size() - 2];
        const auto& g = chain.back();
        chain.push_back(-divrem(f, g).second);
    }
    const auto variations = [&chain](const Rational& at) {
        int count = 0, last = 0;
        for (const auto& f : chain) {
            if (f.is_zero()) continue;
            const int sg = f.eval(at).sign();
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++count;
            last = sg;
        }
        return count;
    };
    return variations(a) - variations(b);
}

// 1 + max |c_i| of the monic polynomial: strictly exceeds every root modulus.
inline Rational cauchy_bound(const Poly<Rational>& monic) {
    Rational m;
    for (std::size_t i = 0; i + 1 < monic.size(); ++i) {
        const Rational a = monic[i].abs();
        if (m < a) m = a;
    }
    return m + Rational(1);
}

}  // namespace detail

// Counts positive and negative eigenvalues (with multiplicity) of a
// symmetric rational matrix: exact characteristic polynomial, then Sturm
// counts on squarefree layers peeled off by repeated gcd.
inline std::pair<int, int> eigen_sign_count(const DenseMatrix<Rational>& m) {
    if (!m.symmetric()) throw std::domain_error("eigen_sign_count needs a symmetric matrix");
    Poly<Rational> chi = char_poly(m);
    // strip eigenvalue 0
    std::size_t val = 0;
    while (val < chi.size() && chi[val].is_zero()) ++val;
    Poly<Rational> g = chi.quo_x(val);
    int n_pos = 0, n_neg = 0;
    while (g.degree() >= 1) {
        const Poly<Rational> w = poly_gcd(g, g.derivative());
        const Poly<Rational> s = divrem(g, w).first;  // squarefree part, monic up to lc
        const Poly<Rational> sm = s.lead().is_one() ? s : s.scaled(s.lead().inv());
        if (sm.degree() >= 1) {
            const Rational bound = detail::cauchy_bound(sm);
            n_pos += detail::sturm_count(sm, Rational(0), bound);
            n_neg += detail::sturm_count(sm, -bound, Rational(0));
        }
        g = w;
    }
    return {n_pos, n_neg};
}

// p_0 .. p_{count-1} by Newton's identities; an independent check of the
// power-sum generating series.
inline std::vector<Rational> newton_power_sums(const Poly<Rational>& f, int count) {
    if (f.degree() < 1) throw std::domain_error("power sums need a positive-degree polynomial");
    const Poly<Rational> monic = f.lead().is_one() ? f : f.scaled(f.lead().inv());
    const int n = monic.degree();
    // e_j = (-1)^j * coefficient of x^{n-j}
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
    e[0] = Rational(1);
    for (int j = 1; j <= n; ++j) {
        e[static_cast<std::size_t>(j)] = monic[static_cast<std::size_t>(n - j)];
        if (j % 2 == 1) e[static_cast<std::size_t>(j)] = -e[static_cast<std::size_t>(j)];
    }
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            p.push_back(Rational(n));
            continue;
        }
        Rational acc;
        for (int j = 1; j < k; ++j) {
            if (j > n) break;
            Rational term = e[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(k - j)];
            if (j % 2 == 0) term = -term;
            acc += term;
        }
        if (k <= n) {
            Rational tail = e[static_cast<std::size_t>(k)] * Rational(k);
            if (k % 2 == 0) tail = -tail;
            acc += tail;
        }
        p.push_back(acc);
    }
    return p;
}

}  // namespace hankel::oracles
