#pragma once

#include <hankel/hankel.hpp>

#include <random>
#include <string>
#include <vector>

namespace testutil {

inline hankel::Rational rat(const std::string& s) { return hankel::Rational::from_string(s); }

inline hankel::Poly<hankel::Rational> rp(const std::string& s) {
    return hankel::parse_poly(s, hankel::RationalScalars{});
}

// Random polynomial of exact degree `deg` with integer coefficients in
// [-bound, bound].
inline hankel::Poly<hankel::Rational> random_int_poly(std::mt19937_64& rng, int deg, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<hankel::Rational> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c.emplace_back(dist(rng));
    int lead = dist(rng);
    while (lead == 0) lead = dist(rng);
    c.emplace_back(lead);
    return hankel::Poly<hankel::Rational>(std::move(c));
}

inline hankel::Poly<hankel::Fp> random_fp_poly(std::mt19937_64& rng, int deg, std::uint64_t p) {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    std::uniform_int_distribution<std::uint64_t> nonzero(1, p - 1);
    std::vector<hankel::Fp> c;
    c.reserve(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < deg; ++i) c.emplace_back(dist(rng), p);
    c.emplace_back(nonzero(rng), p);
    return hankel::Poly<hankel::Fp>(std::move(c));
}

}  // namespace testutil
