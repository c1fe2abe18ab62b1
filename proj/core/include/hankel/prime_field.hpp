#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

// Counts field multiplications and inversions (additions are excluded,
// matching how M(n)-based operation counts are taken).
struct FieldOpCounter {
    static thread_local std::uint64_t muls;
    static thread_local std::uint64_t invs;
    static void reset() { muls = 0; invs = 0; }
    static std::uint64_t total() { return muls + invs; }
};

namespace detail {

inline std::uint64_t mulmod_counted(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    ++FieldOpCounter::muls;
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// a^e mod p; multiplications are counted.
std::uint64_t powmod_counted(std::uint64_t a, std::uint64_t e, std::uint64_t p);

// Modular inverse by extended Euclid; counts a single inversion.
std::uint64_t invmod_counted(std::uint64_t a, std::uint64_t p);

}  // namespace detail

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Element of order 2^k in GF(p)*, where order divides p - 1.
std::uint64_t root_of_unity_pow2(std::uint64_t p, std::uint64_t order);

// Default modulus: a 62-bit prime with 2^57 | p - 1, so number-theoretic
// transforms are available for every practical length.
inline constexpr std::uint64_t kDefaultPrime = 4179340454199820289ULL;  // 29 * 2^57 + 1

// Element of GF(p) for a word-size prime p. The modulus travels inside the
// value, so independent computations may use different primes concurrently.
// Mixing moduli in one expression is a logic error and throws.
class Fp {
  public:
    Fp() = default;  // unusable placeholder (modulus 0); assign before use
    Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

    static Fp from_signed(std::int64_t value, std::uint64_t modulus) {
        const std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t r = value % m;
        if (r < 0) r += m;
        return Fp(static_cast<std::uint64_t>(r), modulus);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1 % p_, p_); }
    Fp from_int(std::int64_t n) const { return from_signed(n, p_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(detail::mulmod_counted(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp inv() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
        return Fp(detail::invmod_counted(v_, p_), p_);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::logic_error("GF(p) modulus mismatch");
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

}  // namespace hankel
