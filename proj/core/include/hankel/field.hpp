#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

namespace hankel {

// Arithmetic capability expected from a coefficient field element.
// Context (such as a prime modulus) travels inside the values, so constants
// are derived from an existing element instead of default construction.
template <class F>
concept Field = std::copyable<F> && std::equality_comparable<F> &&
    requires(const F a, const F b, std::int64_t n) {
        { a + b } -> std::convertible_to<F>;
        { a - b } -> std::convertible_to<F>;
        { a * b } -> std::convertible_to<F>;
        { -a } -> std::convertible_to<F>;
        { a.inv() } -> std::convertible_to<F>;
        { a.zero() } -> std::convertible_to<F>;
        { a.one() } -> std::convertible_to<F>;
        { a.from_int(n) } -> std::convertible_to<F>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.to_string() } -> std::convertible_to<std::string>;
    };

// Fields with a total order compatible with the arithmetic (the rationals).
// Sign variation, signatures and real-root counting only exist here.
template <class F>
concept OrderedField = Field<F> && std::totally_ordered<F> &&
    requires(const F a) {
        { a.sign() } -> std::convertible_to<int>;
    };

// base^e by binary exponentiation, e >= 0.
template <Field F>
F field_pow(F base, std::uint64_t e) {
    F acc = base.one();
    while (e != 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return acc;
}

namespace tuning {
// Crossover sizes (operand lengths / degrees). Defaults follow what measured
// well at desk scale; override before heavy runs if profiling says so.
inline std::size_t schoolbook_mul_threshold = 32;
inline std::size_t half_gcd_threshold = 50;
inline std::size_t newton_division_threshold = 32;
}  // namespace tuning

}  // namespace hankel
