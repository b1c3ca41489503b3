#include "gseed/complexf.hpp"

namespace gseed {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    /* scale by the larger component of b to avoid overflow in |b|^2;
     * with mpfr's huge exponent range this is near-paranoia, but cheap */
    if (abs(b.re()) >= abs(b.im())) {
        BigFloat t = b.im() / b.re();
        BigFloat d = b.re() + b.im() * t;
        return {(a.re() + a.im() * t) / d, (a.im() - a.re() * t) / d};
    }
    BigFloat t = b.re() / b.im();
    BigFloat d = b.re() * t + b.im();
    return {(a.re() * t + a.im()) / d, (a.im() * t - a.re()) / d};
}

BigFloat abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigFloat arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
    /* principal square root via polar form */
    BigFloat m = sqrt(abs(z));
    BigFloat a = arg(z);
    BigFloat half(Rat(1, 2), a.prec());
    a = a * half;
    return {m * cos(a), m * sin(a)};
}

BigComplex pow_si(const BigComplex& z, long e) {
    mpfr_prec_t prec = z.prec();
    if (e == 0) return {BigFloat(1L, prec), BigFloat(0L, prec)};
    bool inv = e < 0;
    unsigned long k = inv ? (unsigned long)(-e) : (unsigned long)e;
    BigComplex acc(BigFloat(1L, prec), BigFloat(0L, prec));
    BigComplex base = z;
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (inv) return BigComplex(BigFloat(1L, prec), BigFloat(0L, prec)) / acc;
    return acc;
}

}  // namespace gseed
