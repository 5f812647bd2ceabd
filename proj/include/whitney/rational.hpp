#pragma once

#include <gmpxx.h>

#include <string>

namespace whitney {

// Exact arithmetic only: the base field is Q, realized with GMP rationals.
// mpq_class keeps gcd(|num|, den) = 1 and den > 0 once canonicalized.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace whitney
