#pragma once

#include <cstdint>

#include "schubert/errors.hpp"

namespace schubert {

// All lattice arithmetic goes through these helpers. Labels stay tiny in
// practice, but products of labels with pairing values feed polynomial
// coefficients that can legitimately grow, so every step is checked.

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer addition overflowed");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer subtraction overflowed");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer multiplication overflowed");
    return r;
}

}  // namespace schubert
