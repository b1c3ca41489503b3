#pragma once

#include "gseed/bigfloat.hpp"

namespace gseed {

/* Complex numbers over BigFloat. Only the handful of operations the
 * saddle-point analysis needs; powers with integer exponents are done by
 * squaring so no branch cuts are crossed silently, and log/arg are the
 * principal branch by construction (atan2).
 */
class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const Rat& re, const Rat& im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}
    explicit BigComplex(const BigFloat& re) : re_(re), im_(0L, re.prec()) {}

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) {
        return {s * a.re_, s * a.im_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex conj() const { return {re_, -im_}; }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

private:
    BigFloat re_, im_;
};

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/* principal branch: log|z| + i*atan2(im, re) */
BigComplex log(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex pow_si(const BigComplex& z, long e);

}  // namespace gseed
