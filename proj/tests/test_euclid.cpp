#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <random>

using namespace hankel;
using testutil::random_fp_poly;
using testutil::random_int_poly;
using testutil::rp;

namespace {

template <Field F>
void check_same_quotients(const QuotientSequence<F>& a, const QuotientSequence<F>& b,
                          std::size_t prefix) {
    REQUIRE(prefix <= a.steps.size());
    REQUIRE(prefix <= b.steps.size());
    for (std::size_t i = 0; i < prefix; ++i) {
        CHECK(a.steps[i].B == b.steps[i].B);
        CHECK(a.steps[i].b == b.steps[i].b);
        CHECK(a.steps[i].m == b.steps[i].m);
    }
}

// Standard Euclidean quotients computed the naive way, for the sign lemma.
template <Field F>
std::vector<Poly<F>> standard_quotients(Poly<F> a, Poly<F> b) {
    std::vector<Poly<F>> out;
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        out.push_back(std::move(q));
        a = std::move(b);
        b = std::move(r);
    }
    return out;
}

// Builds (f0, f1) whose standard chain has exactly the prescribed quotient
// degrees, to stress half-GCD around its split boundaries.
Poly<Fp> chain_from_degrees(std::mt19937_64& rng, const std::vector<int>& degs, std::uint64_t p,
                            Poly<Fp>* f1_out) {
    Poly<Fp> r1 = Poly<Fp>::constant(Fp(1 + rng() % (p - 1), p));
    Poly<Fp> r2;
    for (auto it = degs.rbegin(); it != degs.rend(); ++it) {
        Poly<Fp> q = random_fp_poly(rng, *it, p);
        Poly<Fp> r0 = q * r1 + r2;
        r2 = std::move(r1);
        r1 = std::move(r0);
    }
    *f1_out = std::move(r2);
    return r1;
}

}  // namespace

TEST_CASE("classical chain on small cases") {
    const auto sc = sturm_chain_classical(rp("x^2-1"), rp("2*x"));
    REQUIRE(sc.chain.size() == 4);
    CHECK(sc.chain[0] == rp("x^2-1"));
    CHECK(sc.chain[1] == rp("2*x"));
    CHECK(sc.chain[2] == rp("1"));
    CHECK(sc.chain[3].is_zero());
    REQUIRE(sc.quotients.steps.size() == 2);
    CHECK(sc.quotients.steps[0].B == rp("1/2*x"));
    CHECK(sc.quotients.steps[1].B == rp("2*x"));
    CHECK(sc.quotients.exhausted);

    const auto exact = sturm_chain_classical(rp("x^2"), rp("x"));
    REQUIRE(exact.chain.size() == 3);
    CHECK(exact.chain[2].is_zero());
    CHECK(exact.quotients.steps[0].B == rp("x"));
}

TEST_CASE("chain recurrence f_i = B_i f_{i+1} - f_{i+2} and degree bookkeeping") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const int d1 = int(rng() % 10);
        const int d0 = d1 + 1 + int(rng() % 6);
        const auto f0 = random_int_poly(rng, d0, 9);
        const auto f1 = random_int_poly(rng, d1, 9);
        const auto sc = sturm_chain_classical(f0, f1);
        const auto& c = sc.chain;
        for (std::size_t i = 0; i + 2 < c.size(); ++i) {
            CHECK(c[i] == sc.quotients.steps[i].B * c[i + 1] - c[i + 2]);
            CHECK(sc.quotients.steps[i].m == c[i].degree() - c[i + 1].degree());
        }
        // gcd(f0, f1) = 1 forces sum m_i = deg f0
        if (c[c.size() - 2].degree() == 0) CHECK(sc.quotients.covered() == f0.degree());
    }
}

TEST_CASE("sign conversion lemma B_i = (-1)^i q_i") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 25; ++t) {
        const int d1 = int(rng() % 12);
        const int d0 = d1 + 1 + int(rng() % 5);
        const auto f0 = random_int_poly(rng, d0, 9);
        const auto f1 = random_int_poly(rng, d1, 9);
        const auto qs = standard_quotients(f0, f1);
        const auto sc = sturm_chain_classical(f0, f1);
        REQUIRE(qs.size() == sc.quotients.steps.size());
        for (std::size_t i = 0; i < qs.size(); ++i)
            CHECK(sc.quotients.steps[i].B == (i % 2 == 0 ? qs[i] : -qs[i]));
    }
}

TEST_CASE("golden chain quotients") {
    const auto f0 = rp("x^13+3*x^12+x^11");
    const auto f1 = rp("4*x^10+6*x^9+x^5+15");
    const auto sc = sturm_chain_classical(f0, f1);
    REQUIRE(sc.quotients.steps.size() == 11);
    CHECK(sc.quotients.covered() == 13);
    CHECK(sc.quotients.steps[0].B == rp("1/4*x^3+3/8*x^2-5/16*x+15/32"));
    CHECK(sc.quotients.steps[1].B == rp("64/45*x+4064/2025"));
    CHECK(sc.quotients.steps[2].B == rp("91125/33536*x-2492775/4393216"));
    CHECK(sc.quotients.steps[3].B == rp("-143877824/61509375*x-254394664/184528125"));

    // half-GCD reproduces the same list, both truncated and in full
    const auto full = half_gcd_quotients(f0, f1, 13);
    CHECK(full.exhausted);
    check_same_quotients(full, sc.quotients, sc.quotients.steps.size());

    const auto part = half_gcd_quotients(f0, f1, 7);
    CHECK(part.covered() == 7);
    CHECK_FALSE(part.exhausted);
    check_same_quotients(part, sc.quotients, part.steps.size());
}

TEST_CASE("half-GCD equals the classical chain (rational fuzz)") {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 60; ++t) {
        const int d1 = int(rng() % 24);
        const int d0 = d1 + 1 + int(rng() % 8);
        const auto f0 = random_int_poly(rng, d0, 9);
        const auto f1 = random_int_poly(rng, d1, 9);
        const auto ref = sturm_chain_classical(f0, f1).quotients;
        const auto got = half_gcd_quotients(f0, f1, d0);
        CHECK(got.exhausted == ref.exhausted);
        REQUIRE(got.steps.size() == ref.steps.size());
        check_same_quotients(got, ref, ref.steps.size());
    }
}

TEST_CASE("half-GCD equals the classical chain (GF(p) fuzz)") {
    std::mt19937_64 rng(314);
    for (int t = 0; t < 25; ++t) {
        const int d1 = 1 + int(rng() % 280);
        const int d0 = d1 + 1 + int(rng() % 20);
        const auto f0 = random_fp_poly(rng, d0, kDefaultPrime);
        const auto f1 = random_fp_poly(rng, d1, kDefaultPrime);
        const auto ref = sturm_chain_classical(f0, f1).quotients;
        const auto got = half_gcd_quotients(f0, f1, d0);
        REQUIRE(got.steps.size() == ref.steps.size());
        check_same_quotients(got, ref, ref.steps.size());
    }
}

TEST_CASE("half-GCD truncation across prescribed quotient degrees") {
    std::mt19937_64 rng(999);
    const std::uint64_t p = 101;  // small field makes degenerate cases frequent
    for (int t = 0; t < 400; ++t) {
        const int len = 1 + int(rng() % 7);
        std::vector<int> degs;
        const int choices[] = {1, 1, 1, 2, 3, 5, 8, 13};
        for (int i = 0; i < len; ++i) degs.push_back(choices[rng() % 8]);
        Poly<Fp> f1;
        const Poly<Fp> f0 = chain_from_degrees(rng, degs, p, &f1);
        if (f1.is_zero() || f0.degree() <= f1.degree()) continue;
        const auto ref = sturm_chain_classical(f0, f1).quotients;
        const int total = ref.covered();
        for (int need = 1; need <= total + 1; ++need) {
            const auto got = half_gcd_quotients(f0, f1, need);
            // shortest prefix whose degree sum reaches `need`, or the full chain
            std::size_t expect = 0;
            int cum = 0;
            while (expect < ref.steps.size() && cum < need) {
                cum += ref.steps[expect].m;
                ++expect;
            }
            REQUIRE(got.steps.size() == expect);
            check_same_quotients(got, ref, expect);
            CHECK(got.exhausted == (expect == ref.steps.size()));
        }
    }
}

TEST_CASE("half-GCD handles a huge final quotient") {
    // f1 of degree 0 gives a single quotient of degree deg f0
    const auto f0 = rp("x^40-2*x+5");
    const auto f1 = rp("3");
    const auto q = half_gcd_quotients(f0, f1, 40);
    REQUIRE(q.steps.size() == 1);
    CHECK(q.steps[0].m == 40);
    CHECK(q.steps[0].b == Rational(1, 3));
    CHECK(q.exhausted);
}

TEST_CASE("chain preconditions") {
    CHECK_THROWS_AS(sturm_chain_classical(rp("x"), rp("x^2")), std::domain_error);
    CHECK_THROWS_AS(sturm_chain_classical(rp("x"), Poly<Rational>()), std::domain_error);
    CHECK_THROWS_AS(sturm_chain_classical(Poly<Rational>(), rp("x")), std::domain_error);
    CHECK_THROWS_AS(half_gcd_quotients(rp("x+1"), rp("x^3"), 3), std::domain_error);
}
