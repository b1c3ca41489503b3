#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gseed/rational.hpp"

namespace gseed {

/* Dense univariate polynomial over Q, coefficients ascending.
 * The zero polynomial has an empty coefficient vector and degree -1.
 * The same type serves for polynomials in z, in theta/X and in the
 * recurrence index n; the variable name only matters for printing.
 */
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly monomial(const Rat& c, size_t pow);
    /* X + a as a convenience for building products of linear factors */
    static RationalPoly linear(const Rat& a);

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const;
    Rat coeff(long i) const;  // 0 outside range
    void set_coeff(size_t i, const Rat& v);
    const Rat& leading() const;

    /* ord_0: index of the lowest nonzero coefficient (-1 for zero poly) */
    int valuation() const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const Rat& s);
    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
    friend RationalPoly operator*(RationalPoly a, const Rat& s) { return a *= s; }
    friend RationalPoly operator*(const Rat& s, RationalPoly a) { return a *= s; }
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    Rat eval(const Rat& x) const;
    RationalPoly derivative() const;
    /* P(X + a), exact Taylor shift */
    RationalPoly shift(const Rat& a) const;
    /* P(-X) */
    RationalPoly reflect() const;
    /* P(X) * X^k */
    RationalPoly shift_up(size_t k) const;
    /* quotient of exact division by (X - root); throws if the division
     * leaves a remainder */
    RationalPoly deflate(const Rat& root) const;

    /* lcm of coefficient denominators (1 for the zero polynomial) */
    Int denominator_lcm() const;
    /* largest |coefficient| */
    Rat height() const;

    std::string to_string(const std::string& var = "X") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/* Euclidean division: returns (quotient, remainder). */
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b);

/* Monic gcd over Q. */
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

/* p / gcd(p, p'): same roots, all simple. */
RationalPoly square_free_part(const RationalPoly& p);

/* Exact rational roots with multiplicity plus the unfactored cofactor.
 * Candidates come from low-precision numeric roots rationalized against
 * the divisors of the integer leading coefficient, then verified by exact
 * deflation, so no big-integer factorization is needed.
 */
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    RationalPoly unfactored;  // constant when the polynomial splits over Q
};

RationalRoots rational_roots(const RationalPoly& p);

}  // namespace gseed
