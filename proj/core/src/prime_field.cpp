#include "hankel/prime_field.hpp"

namespace hankel {

thread_local std::uint64_t FieldOpCounter::muls = 0;
thread_local std::uint64_t FieldOpCounter::invs = 0;

namespace detail {

std::uint64_t powmod_counted(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1) acc = mulmod_counted(acc, a, p);
        e >>= 1;
        if (e != 0) a = mulmod_counted(a, a, p);
    }
    return acc;
}

std::uint64_t invmod_counted(std::uint64_t a, std::uint64_t p) {
    ++FieldOpCounter::invs;
    // extended Euclid on (a, p); p prime and a != 0 mod p
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = p, new_r = a % p;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        const std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        const std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw std::domain_error("not invertible: modulus is not prime");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
                 : static_cast<std::uint64_t>(t);
}

namespace {

// Uncounted helpers for the primality test; it is a validation step, not
// part of any measured computation.
std::uint64_t mulmod_raw(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_raw(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1) acc = mulmod_raw(acc, a, p);
        e >>= 1;
        if (e != 0) a = mulmod_raw(a, a, p);
    }
    return acc;
}

}  // namespace
}  // namespace detail

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sprp bases covering the whole 64-bit range.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = detail::powmod_raw(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_raw(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t root_of_unity_pow2(std::uint64_t p, std::uint64_t order) {
    if (order == 0 || (order & (order - 1)) != 0 || (p - 1) % order != 0)
        throw std::domain_error("no root of unity of the requested order");
    if (order == 1) return 1;
    // g^((p-1)/2) = -1 for any quadratic non-residue g, so
    // w = g^((p-1)/order) has exact order `order`.
    for (std::uint64_t g = 2;; ++g) {
        if (detail::powmod_counted(g, (p - 1) / 2, p) == p - 1)
            return detail::powmod_counted(g, (p - 1) / order, p);
    }
}

}  // namespace hankel
