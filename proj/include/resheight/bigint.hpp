#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace resheight {

// Exact signed arbitrary-precision integer. Heights grow like 1.84^n, so they
// leave the 64-bit range near n = 90 (quadratic) / n = 70 (cubic); everything
// exact in this library is an mpz from the start.
using bigint = mpz_class;

bigint factorial(unsigned long n);
bigint binomial(unsigned long n, unsigned long k);

inline bigint abs(const bigint& v) {
    bigint r;
    mpz_abs(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline std::string to_string(const bigint& v) { return v.get_str(); }

// Lossy conversion keeping ~53 bits of mantissa but the full long double
// exponent range (mpz_get_d alone overflows past 2^1024).
inline long double to_long_double(const bigint& v) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp2));
}

// log|v| for nonzero v, exact to double precision of the mantissa.
inline long double log_abs(const bigint& v) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) +
           static_cast<long double>(exp2) * 0.6931471805599453094L;
}

} // namespace resheight
