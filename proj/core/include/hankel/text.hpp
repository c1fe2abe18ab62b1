#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/field.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/prime_field.hpp"
#include "hankel/rational.hpp"

namespace hankel {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Scalar factories: how a coefficient field builds elements from decimal
// integer text. The prime-field one reduces the digits modulo p on the fly.
struct RationalScalars {
    using field_type = Rational;
    Rational from_digits(const std::string& digits, std::size_t pos) const {
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("expected integer", pos);
        if (digits.empty()) throw ParseError("expected integer", pos);
        return Rational(mpz_class(digits, 10), mpz_class(1));
    }
};

struct FpScalars {
    using field_type = Fp;
    std::uint64_t p;
    Fp from_digits(const std::string& digits, std::size_t pos) const {
        if (digits.empty()) throw ParseError("expected integer", pos);
        std::uint64_t acc = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("expected integer", pos);
            acc = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(acc) * 10 + static_cast<unsigned>(c - '0')) % p);
        }
        return Fp(acc, p);
    }
};

namespace detail {

// Recursive-descent parser for the human polynomial form:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' uint]
//   primary:= INT ['/' INT] | 'x' | '(' expr ')'
template <class Scalars>
class PolyParser {
    using F = typename Scalars::field_type;

  public:
    PolyParser(const std::string& text, const Scalars& scalars)
        : s_(text), scalars_(scalars) {}

    Poly<F> parse() {
        Poly<F> v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
        return v;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    std::string digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        return s_.substr(start, pos_ - start);
    }

    Poly<F> expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly<F> acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly<F> term() {
        Poly<F> acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Poly<F> factor() {
        Poly<F> base = primary();
        if (eat('^')) {
            const std::size_t pos = pos_;
            const std::string d = digits();
            if (d.size() > 7) throw ParseError("exponent too large", pos);
            std::size_t e = static_cast<std::size_t>(std::stoull(d));
            if (e > 1000000) throw ParseError("exponent too large", pos);
            Poly<F> acc = one_poly();
            Poly<F> sq = base;
            while (e != 0) {
                if (e & 1) acc = acc * sq;
                e >>= 1;
                if (e != 0) sq = sq * sq;
            }
            return acc;
        }
        return base;
    }

    Poly<F> primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly<F> v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            F o = scalars_.from_digits("1", pos_);
            return Poly<F>::monomial(o, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t pos = pos_;
            F v = scalars_.from_digits(digits(), pos);
            if (eat('/')) {
                const std::size_t dpos = pos_;
                F d = scalars_.from_digits(digits(), dpos);
                if (d.is_zero()) throw ParseError("division by zero", dpos);
                v = v * d.inv();
            }
            return Poly<F>::constant(v);
        }
        throw ParseError("expected number, 'x' or '('", pos_);
    }

    Poly<F> one_poly() { return Poly<F>::constant(scalars_.from_digits("1", pos_)); }

    const std::string& s_;
    std::size_t pos_ = 0;
    Scalars scalars_;
};

}  // namespace detail

// Scalar form "p", "-p" or "p/q".
template <class Scalars>
typename Scalars::field_type parse_scalar(const std::string& text, const Scalars& scalars) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    const std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    auto v = scalars.from_digits(text.substr(dstart, pos - dstart), dstart);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t estart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        auto d = scalars.from_digits(text.substr(estart, pos - estart), estart);
        if (d.is_zero()) throw ParseError("division by zero", estart);
        v = v * d.inv();
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("unexpected character", pos);
    return neg ? -v : v;
}

// Comma-separated ascending coefficient list: "1,3,1" is 1 + 3x + x^2.
template <class Scalars>
Poly<typename Scalars::field_type> parse_poly_coeffs(const std::string& text,
                                                     const Scalars& scalars) {
    using F = typename Scalars::field_type;
    std::vector<F> cs;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            cs.push_back(parse_scalar(text.substr(start, i - start), scalars));
            start = i + 1;
        }
    }
    return Poly<F>(std::move(cs));
}

// Human form with +, -, *, ^ and parentheses: "x^2+3*x+1".
template <class Scalars>
Poly<typename Scalars::field_type> parse_poly_human(const std::string& text,
                                                    const Scalars& scalars) {
    detail::PolyParser<Scalars> p(text, scalars);
    return p.parse();
}

// Accepts either form: the human grammar when 'x' appears, a coefficient
// list when a comma appears, otherwise a single constant.
template <class Scalars>
Poly<typename Scalars::field_type> parse_poly(const std::string& text, const Scalars& scalars) {
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos ||
        text.find('(') != std::string::npos)
        return parse_poly_human(text, scalars);
    if (text.find(',') != std::string::npos) return parse_poly_coeffs(text, scalars);
    return Poly<typename Scalars::field_type>::constant(parse_scalar(text, scalars));
}

}  // namespace hankel
