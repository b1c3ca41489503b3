#include "gseed/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace gseed {

static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return std::max(a.prec(), b.prec());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(join(a, b));
    mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(prec());
    mpfr_neg(out.raw(), v_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::ldexp(long e) const {
    BigFloat out(prec());
    mpfr_mul_2si(out.raw(), v_, e, MPFR_RNDN);
    return out;
}

std::string BigFloat::to_string(size_t digits) const {
    if (is_nan()) return "nan";
    if (!is_finite()) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";
    if (digits == 0) digits = (size_t)((double)prec() * 0.30103) + 2;
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string body = neg ? mant.substr(1) : mant;
    /* strip trailing zeros but keep one digit */
    size_t last = body.find_last_not_of('0');
    body = body.substr(0, std::max<size_t>(last + 1, 1));
    std::string out = (neg ? "-0." : "0.") + body + "e" + std::to_string((long)e);
    return out;
}

#define GSEED_UNARY(name, fn)                  \
    BigFloat name(const BigFloat& x) {         \
        BigFloat out(x.prec());                \
        fn(out.raw(), x.raw(), MPFR_RNDN);     \
        return out;                            \
    }

GSEED_UNARY(abs, mpfr_abs)
GSEED_UNARY(sqrt, mpfr_sqrt)
GSEED_UNARY(log, mpfr_log)
GSEED_UNARY(exp, mpfr_exp)
GSEED_UNARY(sin, mpfr_sin)
GSEED_UNARY(cos, mpfr_cos)

#undef GSEED_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat out(std::max(y.prec(), x.prec()));
    mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat out(std::max(y.prec(), x.prec()));
    mpfr_hypot(out.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return out;
}

BigFloat pow_si(const BigFloat& x, long e) {
    BigFloat out(x.prec());
    mpfr_pow_si(out.raw(), x.raw(), e, MPFR_RNDN);
    return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat out(1L, prec);
    return out.ldexp(e);
}

}  // namespace gseed
