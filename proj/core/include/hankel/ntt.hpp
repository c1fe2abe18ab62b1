#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hankel/prime_field.hpp"

namespace hankel::ntt {

inline std::size_t next_pow2(std::size_t n) {
    std::size_t r = 1;
    while (r < n) r <<= 1;
    return r;
}

// A length-n transform exists iff n is a power of two dividing p - 1.
inline bool available(std::uint64_t p, std::size_t length) {
    if (length == 0 || (length & (length - 1)) != 0) return false;
    return (p - 1) % static_cast<std::uint64_t>(length) == 0;
}

namespace detail {

inline void bit_reverse(std::vector<std::uint64_t>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
}

inline void transform(std::vector<std::uint64_t>& a, std::uint64_t p, bool inverse) {
    using hankel::detail::invmod_counted;
    using hankel::detail::mulmod_counted;
    using hankel::detail::powmod_counted;
    const std::size_t n = a.size();
    if (n <= 1) return;
    bit_reverse(a);
    std::uint64_t base = root_of_unity_pow2(p, n);
    if (inverse) base = invmod_counted(base, p);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::uint64_t step = powmod_counted(base, n / len, p);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t w = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::uint64_t u = a[i + j];
                const std::uint64_t v = mulmod_counted(a[i + j + len / 2], w, p);
                std::uint64_t s = u + v;
                if (s >= p) s -= p;
                a[i + j] = s;
                a[i + j + len / 2] = u >= v ? u - v : u + p - v;
                w = mulmod_counted(w, step, p);
            }
        }
    }
    if (inverse) {
        const std::uint64_t ninv = invmod_counted(static_cast<std::uint64_t>(n) % p, p);
        for (auto& x : a) x = mulmod_counted(x, ninv, p);
    }
}

}  // namespace detail

// Convolution of a and b over GF(p); result has size |a| + |b| - 1
// (trailing zeros not stripped).
inline std::vector<std::uint64_t> convolve(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b,
                                           std::uint64_t p) {
    const std::size_t out = a.size() + b.size() - 1;
    const std::size_t n = next_pow2(out);
    std::vector<std::uint64_t> fa(n, 0), fb(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
    detail::transform(fa, p, false);
    detail::transform(fb, p, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] = hankel::detail::mulmod_counted(fa[i], fb[i], p);
    detail::transform(fa, p, true);
    fa.resize(out);
    return fa;
}

}  // namespace hankel::ntt
