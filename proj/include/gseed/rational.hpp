#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "gseed/errors.hpp"

namespace gseed {

using Int = mpz_class;
using Rat = mpq_class;

/* Parse "p", "-p", "p/q". gmpxx does not canonicalize strings for us. */
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw input_error("bad rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw input_error("zero denominator in rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Int numerator(const Rat& r) { return Int(r.get_num()); }
inline Int denominator(const Rat& r) { return Int(r.get_den()); }

inline Int int_lcm(const Int& a, const Int& b) {
    Int out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), a.get_mpz_t(), e);
    return out;
}

inline Rat rat_pow(const Rat& a, long e) {
    Rat out(1);
    Rat base = e >= 0 ? a : Rat(1) / a;
    unsigned long k = e >= 0 ? (unsigned long)e : (unsigned long)(-e);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

/* lcm(1..n), the usual d_n. */
inline Int lcm_upto(long n) {
    Int d(1);
    for (long k = 2; k <= n; ++k) d = int_lcm(d, Int(k));
    return d;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

/* Rising factorial (x)_m = x(x+1)...(x+m-1). */
inline Rat pochhammer(const Rat& x, unsigned long m) {
    Rat out(1);
    Rat t = x;
    for (unsigned long i = 0; i < m; ++i, t += 1) out *= t;
    return out;
}

}  // namespace gseed
