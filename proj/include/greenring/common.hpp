#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace greenring {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a caller violates a documented precondition (CLI exit 2).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal consistency check fails (CLI exit 3).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// p^e with overflow check against the 64-bit basis-index cap.
inline long long pow_ll(long long p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        require(r <= INT64_MAX / p, "p^n does not fit in a 64-bit integer");
        r *= p;
    }
    return r;
}

// gmpxx has no long long constructor; long is 64-bit on this platform.
inline Int to_Int(long long v) {
    static_assert(sizeof(long) == 8, "LP64 expected");
    return Int(static_cast<long>(v));
}

// A double together with a conservative absolute error bound.
struct Approx {
    double value = 0.0;
    double err = 0.0;
};

}  // namespace greenring
