#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace curvecat {

// All order/genus/index arithmetic is exact 64-bit with overflow checks.
// The quantities in scope are tiny (indices <= a few hundred, orders
// <= 4g+4); the checked layer keeps every sweep safe up to g ~ 10^6,
// far beyond anything the tool is asked to enumerate.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

// Nonnegative residue of a mod m, m > 0.
inline Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace curvecat
