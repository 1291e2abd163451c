#pragma once

#include <cstdint>

#include "chabgraph/errors.hpp"

namespace chabgraph {

using i64 = std::int64_t;

namespace checked {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition");
    }
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

} // namespace checked
} // namespace chabgraph
