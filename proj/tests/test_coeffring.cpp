#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace hankel;
using testutil::random_fp_poly;
using testutil::random_int_poly;
using testutil::rat;
using testutil::rp;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(2, -4).denominator() == 2);  // denominator stays positive
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and order") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a.inv() == Rational(3));
    CHECK((-a).sign() == -1);
    CHECK(Rational().sign() == 0);
    CHECK(a > b);
    CHECK_THROWS_AS(Rational().inv(), std::domain_error);
    CHECK_THROWS_AS(a / Rational(), std::domain_error);
}

TEST_CASE("rational text form") {
    CHECK(Rational::from_string("-22/4") == Rational(-11, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK(Rational(-11, 2).to_string() == "-11/2");
    CHECK_THROWS(Rational::from_string("1/“"));
    CHECK_THROWS(Rational::from_string("1/0"));
    CHECK_THROWS(Rational::from_string(""));
}

TEST_CASE("prime field basics") {
    const std::uint64_t p = 101;
    const Fp a(57, p), b(90, p);
    CHECK((a + b).value() == 46);
    CHECK((a - b).value() == 68);
    CHECK((a * b).value() == 57 * 90 % 101);
    CHECK((a * a.inv()).is_one());
    CHECK(Fp::from_signed(-1, p).value() == 100);
    CHECK(field_pow(a, 100).is_one());  // Fermat
    CHECK_THROWS_AS(Fp(0, p).inv(), std::domain_error);
    CHECK_THROWS_AS(a + Fp(1, 103), std::logic_error);
}

TEST_CASE("primality check") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(997));
    CHECK_FALSE(is_prime_u64(561));   // Carmichael
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64((1ULL << 61) - 1));
    CHECK(is_prime_u64(kDefaultPrime));
    CHECK((kDefaultPrime - 1) % (1ULL << 57) == 0);
}

TEST_CASE("polynomial canonical form and degree") {
    const Poly<Rational> z;
    CHECK(z.is_zero());
    CHECK(z.degree() == kNegInfDegree);
    CHECK(z.degree() < -1000000);
    CHECK(Poly<Rational>({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(rp("0").is_zero());
}

TEST_CASE("polynomial ring operations") {
    CHECK(rp("1+x") * rp("1-x") == rp("1-x^2"));
    CHECK((rp("x^3+5") * Poly<Rational>()).is_zero());
    CHECK(rp("x^2+3*x+1") * rp("x^11") == rp("x^13+3*x^12+x^11"));
    CHECK(rp("x+1") + rp("-x-1") == Poly<Rational>());
    CHECK(rp("x^2") - rp("x") == rp("x^2-x"));
}

TEST_CASE("divrem basic examples") {
    auto [q1, r1] = divrem(rp("x^3+2*x+1"), rp("x^2+1"));
    CHECK(q1 == rp("x"));
    CHECK(r1 == rp("x+1"));

    const auto p = rp("3*x^4-x+2");
    auto [q2, r2] = divrem(p, p);
    CHECK(q2 == rp("1"));
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(divrem(p, Poly<Rational>()), std::domain_error);
}

TEST_CASE("divrem of the golden example first step") {
    auto [q, r] = divrem(rp("x^13+3*x^12+x^11"), rp("4*x^10+6*x^9+x^5+15"));
    CHECK(q == rp("1/4*x^3+3/8*x^2-5/16*x+15/32"));
    CHECK(r == rp("-45/16*x^9-1/4*x^8-3/8*x^7+5/16*x^6-15/32*x^5-15/4*x^3-45/8*x^2+75/16*x-225/32"));
}

TEST_CASE("divrem reconstruction property") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> degd(0, 18);
    for (int t = 0; t < 120; ++t) {
        const int db = degd(rng);
        const int da = db + degd(rng);
        const auto a = random_int_poly(rng, da, 9);
        const auto b = random_int_poly(rng, db, 9);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("newton and classical division agree") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_fp_poly(rng, 300 + t, kDefaultPrime);
        const auto b = random_fp_poly(rng, 120 + t, kDefaultPrime);
        const auto fast = hankel::detail::divrem_newton(a, b);
        const auto slow = hankel::detail::divrem_classical(a, b);
        CHECK(fast.first == slow.first);
        CHECK(fast.second == slow.second);
    }
    // over the rationals too
    const auto a = random_int_poly(rng, 90, 5);
    const auto b = random_int_poly(rng, 35, 5);
    CHECK(hankel::detail::divrem_newton(a, b) == hankel::detail::divrem_classical(a, b));
}

TEST_CASE("reversal") {
    CHECK(reverse(rp("3*x^2+4*x^3+6*x^5")) == rp("6+4*x^2+3*x^3"));
    CHECK(reverse(rp("7")) == rp("7"));
    CHECK(reverse(rp("x-1")) == rp("1-x"));
    CHECK_THROWS_AS(reverse(Poly<Rational>()), std::domain_error);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto f = random_int_poly(rng, 1 + int(rng() % 12), 9);
        if (f[0].is_zero()) continue;  // involution holds when f(0) != 0
        CHECK(reverse(reverse(f)) == f);
    }
}

TEST_CASE("series expansion of rational functions") {
    const RationalFunction<Rational> geo(rp("1"), rp("1-x"));
    const auto g = series_expand(geo, 4);
    CHECK(g == std::vector<Rational>{1, 1, 1, 1});

    const RationalFunction<Rational> fib(rp("x"), rp("1-x-x^2"));
    CHECK(series_expand(fib, 6) == std::vector<Rational>{0, 1, 1, 2, 3, 5});

    const RationalFunction<Rational> h(rp("x^2*(15*x^10+x^5+6*x+4)"), rp("x^2+3*x+1"));
    CHECK(series_expand(h, 8) ==
          std::vector<Rational>{0, 0, 4, -6, 14, -36, 94, -245});

    CHECK_THROWS_WITH_AS(series_expand(RationalFunction<Rational>(rp("1"), rp("x-x^2")), 3),
                         doctest::Contains("not a power series"), std::domain_error);
}

TEST_CASE("series expansion satisfies D * S = N mod x^m") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        const auto n = random_int_poly(rng, int(rng() % 8), 9);
        auto d = random_int_poly(rng, 1 + int(rng() % 8), 9);
        if (d[0].is_zero()) continue;
        const RationalFunction<Rational> h(n, d);
        const std::size_t m = 17;
        const Poly<Rational> s{series_expand(h, m)};
        const auto lhs = (h.den() * s).truncated(m);
        const auto rhs = h.num().truncated(m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evaluation") {
    CHECK(rp("x^2-1").eval(Rational(2)) == Rational(3));
    CHECK(rp("9*x^4-3*x+5").eval(Rational()) == Rational(5));
    CHECK(rp("x^2+3*x+1").eval(Rational(-1)) == Rational(-1));
}

TEST_CASE("multiplication paths agree") {
    std::mt19937_64 rng(31337);
    // rationals: karatsuba vs schoolbook
    for (int t = 0; t < 4; ++t) {
        const auto a = random_int_poly(rng, 260 + t, 9);
        const auto b = random_int_poly(rng, 241 + t, 9);
        const auto fast = a * b;
        const auto slow = Poly<Rational>(
            hankel::detail::mul_schoolbook<Rational>(a.coeffs(), b.coeffs()));
        CHECK(fast == slow);
    }
    // GF(p): NTT vs karatsuba vs schoolbook, degree up to 2^12
    {
        const auto a = random_fp_poly(rng, 4096, kDefaultPrime);
        const auto b = random_fp_poly(rng, 4095, kDefaultPrime);
        const auto viantt = a * b;
        const auto viakara =
            Poly<Fp>(hankel::detail::mul_karatsuba<Fp>(a.coeffs(), b.coeffs()));
        CHECK(viantt == viakara);
    }
    {
        // 2^61 - 1 has no 2^k roots of unity, so this exercises the fallback
        const std::uint64_t mersenne = (1ULL << 61) - 1;
        const auto a = random_fp_poly(rng, 700, mersenne);
        const auto b = random_fp_poly(rng, 650, mersenne);
        const auto fast = a * b;
        const auto slow = Poly<Fp>(hankel::detail::mul_schoolbook<Fp>(a.coeffs(), b.coeffs()));
        CHECK(fast == slow);
    }
    // strongly unbalanced operands
    {
        const auto a = random_fp_poly(rng, 2000, kDefaultPrime);
        const auto b = random_fp_poly(rng, 40, kDefaultPrime);
        CHECK(a * b == Poly<Fp>(hankel::detail::mul_schoolbook<Fp>(a.coeffs(), b.coeffs())));
    }
}

TEST_CASE("derivative and gcd helpers") {
    CHECK(rp("x^3-x+1").derivative() == rp("3*x^2-1"));
    CHECK(poly_gcd(rp("x^2-1"), rp("x^2-2*x+1")) == rp("x-1"));
    CHECK(poly_gcd(rp("2*x^2-2"), rp("4*x+4")) == rp("x+1"));  // monic result
    CHECK(poly_gcd(rp("x^2+1"), rp("x^3")).degree() == 0);
}

TEST_CASE("polynomial text round trip") {
    const RationalScalars rs;
    CHECK(parse_poly("1,3,1", rs) == rp("x^2+3*x+1"));
    CHECK(parse_poly("x^2*(15*x^10+x^5+6*x+4)", rs) ==
          rp("15*x^12+x^7+6*x^3+4*x^2"));
    CHECK(parse_poly("-x", rs) == rp("0-x"));
    CHECK(parse_poly("-5/2", rs) == Poly<Rational>::constant(rat("-5/2")));
    CHECK(rp("1/4*x^3+3/8*x^2-5/16*x+15/32").to_string() ==
          "1/4*x^3+3/8*x^2-5/16*x+15/32");

    std::mt19937_64 rng(4242);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rational> c;
        const int deg = int(rng() % 9);
        for (int i = 0; i <= deg; ++i) {
            const long num = long(rng() % 19) - 9;
            const long den = 1 + long(rng() % 6);
            c.emplace_back(num, den);
        }
        const Poly<Rational> f{std::move(c)};
        CHECK(parse_poly(f.to_string(), rs) == f);
    }

    const FpScalars fs{101};
    for (int t = 0; t < 30; ++t) {
        const auto f = random_fp_poly(rng, int(rng() % 7), 101);
        CHECK(parse_poly(f.to_string(), fs) == f);
    }
}

TEST_CASE("parser rejects malformed input with a position") {
    const RationalScalars rs;
    CHECK_THROWS_AS(parse_poly("x^^2", rs), ParseError);
    CHECK_THROWS_AS(parse_poly("3*", rs), ParseError);
    CHECK_THROWS_AS(parse_poly("(x+1", rs), ParseError);
    CHECK_THROWS_AS(parse_poly("x+**x", rs), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", rs), ParseError);
    try {
        parse_poly("x^2+&3", rs);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}
