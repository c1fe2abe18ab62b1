#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hankel {

// Arbitrary-precision rational number, the default coefficient field.
// Canonical form is maintained at all times: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit from integer literals
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading '-'; q must be nonzero.
    static Rational from_string(const std::string& text);

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_int(std::int64_t n) const {
        Rational r;
        r.q_ = mpq_class(mpz_class(static_cast<long>(n)));
        return r;
    }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        return Rational(mpq_class(q_ / o.q_));
    }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1 / q_));
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }
    bool operator<=(const Rational& o) const { return q_ <= o.q_; }
    bool operator>(const Rational& o) const { return q_ > o.q_; }
    bool operator>=(const Rational& o) const { return q_ >= o.q_; }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const { return q_.get_str(); }

  private:
    mpq_class q_;
};

}  // namespace hankel
