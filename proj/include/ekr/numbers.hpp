// Exact integer and rational arithmetic (GMP-backed).
#pragma once

#include <gmpxx.h>

#include <string>

namespace ekr {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k); zero when k > n.
inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Canonical "p/q" form ("p" when the denominator is 1).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace ekr
