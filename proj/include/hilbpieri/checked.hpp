#pragma once

#include <cstdint>
#include <stdexcept>

namespace hilb {

using Coef = std::int64_t;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline Coef checked_add(Coef a, Coef b)
{
    Coef r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("coefficient overflow in addition");
    return r;
}

inline Coef checked_mul(Coef a, Coef b)
{
    Coef r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("coefficient overflow in multiplication");
    return r;
}

inline Coef checked_neg(Coef a)
{
    return checked_mul(a, -1);
}

/// n choose k; zero outside 0 <= k <= n.
inline Coef binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Coef r = 1;
    for (int t = 1; t <= k; ++t)
        r = checked_mul(r, n - k + t) / t;
    return r;
}

}  // namespace hilb
