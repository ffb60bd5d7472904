#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace barytet {

using i64 = std::int64_t;

// All lattice arithmetic is exact: any operation that would wrap raises
// std::overflow_error instead of returning a wrong value.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer add overflow");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer sub overflow");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer mul overflow");
    return r;
}

inline i64 checked_neg(i64 a) {
    return checked_sub(0, a);
}

// Least nonnegative residue of x modulo m (m > 0), exact for negative x.
inline i64 mod_floor(i64 x, i64 m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd_nonneg(i64 a, i64 b) {
    return std::gcd(a, b);  // gcd(0, n) = |n|
}

}  // namespace barytet
