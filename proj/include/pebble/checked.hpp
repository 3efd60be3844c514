#pragma once

#include <cstdint>
#include <limits>

#include "pebble/errors.hpp"

// 64-bit checked integer arithmetic. Pebble counts and formula values grow
// like products of prices over the diameter, so every arithmetic step either
// fits in int64 or raises Overflow; nothing wraps silently.

namespace pebble {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        fail(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        fail(ErrorKind::Overflow, "integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        fail(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

// Multiplication that clamps to int64 max instead of failing. Used for
// delivery-cost tables where a saturated (under-estimated) cost only makes
// the admissible prune weaker, never wrong.
inline std::int64_t saturating_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        return std::numeric_limits<std::int64_t>::max();
    return r;
}

// 2^e with overflow checking.
inline std::int64_t checked_pow2(int e)
{
    if (e < 0 || e >= 63)
        fail(ErrorKind::Overflow, "power of two out of int64 range");
    return std::int64_t(1) << e;
}

} // namespace pebble
