#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

// Quotient of two polynomials, gcd-reduced on construction. A zero
// numerator normalizes to 0/1. The scalar normalization of the pair is
// left as given (only the common polynomial factor is removed).
template <Field F>
class RationalFunction {
  public:
    RationalFunction(Poly<F> num, Poly<F> den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = Poly<F>{};
            den_ = Poly<F>::constant(den.lead().one());
            return;
        }
        const Poly<F> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = divrem(num, g).first;
            den = divrem(den, g).first;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // True when the function is a power series around 0.
    bool is_power_series() const { return !den_[0].is_zero(); }

    bool operator==(const RationalFunction& o) const {
        return num_ * o.den_ == o.num_ * den_;
    }

    std::string to_string() const {
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    Poly<F> num_;
    Poly<F> den_;
};

// First `order` power-series coefficients of N/D, by the exact linear
// recurrence driven by D's coefficients. Requires D(0) != 0.
template <Field F>
std::vector<F> series_expand(const RationalFunction<F>& h, std::size_t order) {
    const Poly<F>& D = h.den();
    if (D[0].is_zero()) throw std::domain_error("not a power series: denominator vanishes at 0");
    const F zero = D[0].zero();
    const F d0inv = D[0].inv();
    const Poly<F>& N = h.num();
    std::vector<F> out(order, zero);
    for (std::size_t j = 0; j < order; ++j) {
        F acc = j < N.size() ? N[j] : zero;
        const std::size_t lim = std::min(j, D.size() - 1);
        for (std::size_t i = 1; i <= lim; ++i) acc = acc - D[i] * out[j - i];
        out[j] = acc * d0inv;
    }
    return out;
}

}  // namespace hankel
