#pragma once

// Overflow-checked 64-bit integer helpers. Every coefficient in the library
// goes through these; wrap-around is reported as Errc::overflow.

#include <cstdint>

#include "error.hpp"

namespace kstates {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::overflow, "integer overflow in addition");
    return out;
}

inline Int checked_sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw Error(Errc::overflow, "integer overflow in subtraction");
    return out;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::overflow, "integer overflow in multiplication");
    return out;
}

/// C(a, b), zero outside 0 <= b <= a.
Int binomial(Int a, Int b);

/// 2^e, checked.
Int pow2(Int e);

} // namespace kstates
