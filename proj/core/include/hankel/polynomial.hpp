#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/ntt.hpp"
#include "hankel/prime_field.hpp"

namespace hankel {

// degree of the zero polynomial: below every true degree.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

template <Field F>
class Poly;

namespace detail {

template <Field F>
std::vector<F> mul_schoolbook(std::span<const F> a, std::span<const F> b) {
    const F zero = a[0].zero();
    std::vector<F> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
}

template <Field F>
std::vector<F> mul_karatsuba(std::span<const F> a, std::span<const F> b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= tuning::schoolbook_mul_threshold)
        return mul_schoolbook(a, b);
    const std::size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    const auto lo = [h](std::span<const F> v) { return v.subspan(0, std::min(h, v.size())); };
    const auto hi = [h](std::span<const F> v) {
        return v.size() > h ? v.subspan(h) : std::span<const F>{};
    };
    const auto sum = [](std::span<const F> x, std::span<const F> y) {
        std::vector<F> s(x.begin(), x.end());
        if (s.size() < y.size()) s.resize(y.size(), x.empty() ? y[0].zero() : x[0].zero());
        for (std::size_t i = 0; i < y.size(); ++i) s[i] = s[i] + y[i];
        return s;
    };
    std::vector<F> z0 = mul_karatsuba(lo(a), lo(b));
    std::vector<F> z2 = mul_karatsuba(hi(a), hi(b));
    const std::vector<F> sa = sum(lo(a), hi(a));
    const std::vector<F> sb = sum(lo(b), hi(b));
    std::vector<F> z1 = mul_karatsuba<F>(sa, sb);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = z1[i] - z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = z1[i] - z2[i];
    std::vector<F> r(a.size() + b.size() - 1, a[0].zero());
    for (std::size_t i = 0; i < z0.size(); ++i) r[i] = r[i] + z0[i];
    for (std::size_t i = 0; i < z1.size() && h + i < r.size(); ++i) r[h + i] = r[h + i] + z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) r[2 * h + i] = r[2 * h + i] + z2[i];
    return r;
}

template <Field F>
std::vector<F> mul_dispatch(const std::vector<F>& a, const std::vector<F>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) <= tuning::schoolbook_mul_threshold)
        return mul_schoolbook<F>(a, b);
    if constexpr (std::same_as<F, Fp>) {
        const std::uint64_t p = a[0].modulus();
        if (ntt::available(p, ntt::next_pow2(a.size() + b.size() - 1))) {
            std::vector<std::uint64_t> ra(a.size()), rb(b.size());
            for (std::size_t i = 0; i < a.size(); ++i) ra[i] = a[i].value();
            for (std::size_t i = 0; i < b.size(); ++i) rb[i] = b[i].value();
            const auto rc = ntt::convolve(ra, rb, p);
            std::vector<F> r(rc.size(), a[0].zero());
            for (std::size_t i = 0; i < rc.size(); ++i) r[i] = Fp(rc[i], p);
            return r;
        }
    }
    return mul_karatsuba<F>(a, b);
}

}  // namespace detail

// Dense univariate polynomial over a coefficient field, ascending
// coefficients. Canonical: the empty sequence is zero, otherwise the last
// coefficient is nonzero.
template <Field F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& v) {
        return v.is_zero() ? Poly() : Poly(std::vector<F>{v});
    }
    static Poly monomial(const F& v, std::size_t k) {
        if (v.is_zero()) return Poly();
        std::vector<F> c(k + 1, v.zero());
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }
    const F& lead() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        std::vector<F> r(c_);
        for (auto& x : r) x = -x;
        return Poly(std::move(r));
    }
    Poly operator+(const Poly& o) const {
        std::vector<F> r(c_);
        if (r.size() < o.c_.size()) {
            const F z = o.c_[0].zero();
            r.resize(o.c_.size(), z);
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<F> r(c_);
        if (r.size() < o.c_.size()) {
            const F z = o.c_[0].zero();
            r.resize(o.c_.size(), z);
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator*(const Poly& o) const { return Poly(detail::mul_dispatch(c_, o.c_)); }

    Poly scaled(const F& s) const {
        if (s.is_zero()) return Poly();
        std::vector<F> r(c_);
        for (auto& x : r) x = x * s;
        return Poly(std::move(r));
    }

    // this * x^k
    Poly shifted_up(std::size_t k) const {
        if (c_.empty() || k == 0) return k == 0 ? *this : Poly();
        std::vector<F> r(c_.size() + k, c_[0].zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }
    // this quo x^k (drop the k lowest coefficients)
    Poly quo_x(std::size_t k) const {
        if (k == 0) return *this;
        if (k >= c_.size()) return Poly();
        return Poly(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }
    // this mod x^k
    Poly truncated(std::size_t k) const {
        if (k >= c_.size()) return *this;
        return Poly(std::vector<F>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
    }

    // Horner evaluation.
    F eval(const F& at) const {
        if (c_.empty()) return at.zero();
        F acc = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> r(c_.size() - 1, c_[0].zero());
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * c_[i].from_int(static_cast<std::int64_t>(i));
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Human-readable form, highest power first: "x^2+3*x+1", "1/4*x^3-5/16*x".
    std::string to_string() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

namespace detail {

// Positional reversal of a fixed-width coefficient window.
template <Field F>
std::vector<F> reversed_fixed(const std::vector<F>& c, std::size_t width) {
    std::vector<F> r(c.rbegin(), c.rend());
    r.resize(width, c.empty() ? F{} : c[0].zero());
    return r;
}

// Inverse of f as a power series mod x^prec by Newton iteration; f[0] != 0.
template <Field F>
std::vector<F> series_inverse(const std::vector<F>& f, std::size_t prec) {
    const F zero = f[0].zero();
    const F two = f[0].one() + f[0].one();
    std::vector<F> g{f[0].inv()};
    std::size_t k = 1;
    while (k < prec) {
        k = std::min(2 * k, prec);
        std::vector<F> fk(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(std::min(k, f.size())));
        std::vector<F> fg = mul_dispatch(fk, g);
        fg.resize(k, zero);
        for (auto& x : fg) x = -x;
        fg[0] = fg[0] + two;
        std::vector<F> ng = mul_dispatch(g, fg);
        ng.resize(k, zero);
        g = std::move(ng);
    }
    return g;
}

template <Field F>
std::pair<Poly<F>, Poly<F>> divrem_classical(const Poly<F>& a, const Poly<F>& b) {
    const F zero = b.lead().zero();
    const F lcinv = b.lead().inv();
    std::vector<F> rem = a.coeffs();
    std::vector<F> q(a.size() - b.size() + 1, zero);
    for (std::size_t i = a.size(); i-- > b.size() - 1;) {
        const std::size_t shift = i + 1 - b.size();
        const F c = rem[i] * lcinv;
        if (c.is_zero()) continue;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] = rem[shift + j] - c * b[j];
    }
    rem.resize(b.size() - 1, zero);
    return {Poly<F>(std::move(q)), Poly<F>(std::move(rem))};
}

// Division via reversed-series inversion; pays off when both the quotient
// and the divisor are large.
template <Field F>
std::pair<Poly<F>, Poly<F>> divrem_newton(const Poly<F>& a, const Poly<F>& b) {
    const std::size_t m = a.size() - b.size();  // quotient degree
    std::vector<F> ar = reversed_fixed(a.coeffs(), a.size());
    ar.resize(m + 1);
    const std::vector<F> br = reversed_fixed(b.coeffs(), std::min(b.size(), m + 1));
    const std::vector<F> binv = series_inverse(br, m + 1);
    std::vector<F> qr = mul_dispatch(ar, binv);
    qr.resize(m + 1, b.lead().zero());
    std::vector<F> qc(qr.rbegin(), qr.rend());
    Poly<F> q{std::move(qc)};
    Poly<F> r = a - q * b;
    assert(r.degree() < b.degree());
    return {std::move(q), std::move(r)};
}

}  // namespace detail

// Quotient and remainder with deg r < deg b; exact over the field.
template <Field F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>{}, a};
    if (b.degree() == 0) return {a.scaled(b.lead().inv()), Poly<F>{}};
    const std::size_t m = a.size() - b.size();
    if (std::min(m + 1, b.size()) >= tuning::newton_division_threshold)
        return detail::divrem_newton(a, b);
    return detail::divrem_classical(a, b);
}

// x^{deg f} * f(1/x): coefficient sequence reversed so the lowest nonzero
// term becomes the constant.
template <Field F>
Poly<F> reverse(const Poly<F>& f) {
    if (f.is_zero()) throw std::domain_error("reverse of zero polynomial");
    std::vector<F> r(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly<F>(std::move(r));
}

// Monic gcd; gcd(f, 0) = monic f.
template <Field F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && !a.lead().is_one()) a = a.scaled(a.lead().inv());
    return a;
}

template <Field F>
std::string Poly<F>::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const F& c = c_[i];
        if (c.is_zero()) continue;
        std::string mag;
        bool negative = false;
        if constexpr (OrderedField<F>) {
            negative = c.sign() < 0;
            mag = negative ? (-c).to_string() : c.to_string();
        } else {
            mag = c.to_string();
        }
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        const bool unit = mag == "1";
        if (i == 0) {
            out += mag;
        } else {
            if (!unit) {
                out += mag;
                out += '*';
            }
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

}  // namespace hankel
