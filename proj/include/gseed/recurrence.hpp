#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gseed/series.hpp"
#include "gseed/theta_form.hpp"

namespace gseed {

/* Tables for the shift identity at level s:
 *
 *   sum_{j=0}^ell Q_j(-n) F_{n+j}^[s]
 *     = sum_{j=0}^ell sum_{t=1}^{s-1} beta_{j,t}(n) F_{n+j}^[t]
 *     + sum_{j=0}^ell z^(n+j) B_j(n; theta) F,
 *
 * where Q_j are the theta-form polynomials and every table entry is a
 * polynomial in n with integer coefficients. B_j(n; X) has degree <= d_j - s
 * in X, so the right-hand tail empties out once s exceeds mu.
 */
struct InhomogeneousData {
    int s = 1;
    int ell = 0;
    /* beta[j][t-1] for t = 1..s-1, as polynomials in n */
    std::vector<std::vector<RationalPoly>> beta;
    /* b[j][q] = coefficient of X^q in B_j(n; X), as a polynomial in n */
    std::vector<std::vector<RationalPoly>> b;
};

/* Base case s = 1 by integrating x^(n-1) L F(x) by parts; higher s by
 * integrating the level-s identity once more. Degree bounds
 * deg_n beta[j][t] <= d_j + t - s and deg_n b[j][q] <= d_j - q - s are
 * asserted along the way.
 */
InhomogeneousData shift_tables(const ThetaForm& tf, int s);

Rat beta_value(const InhomogeneousData& T, int j, int t, long n);
RationalPoly b_polynomial(const InhomogeneousData& T, int j, long n);  /* B_j(n; X) */

/* Exact coefficients of z^0..z^(N-1) of LHS - RHS of the identity above at
 * concrete (s, n); all zero iff the identity holds through that order.
 */
std::vector<Rat> recurrence_residual(CoefficientStream& A, const ThetaForm& tf,
                                     const InhomogeneousData& T, long n, long N);

/* Solutions of the homogeneous recurrence sum_j Q_j(-n) U(n+j) = 0 for
 * n >= m, seeded with the identity matrix on the window m..m+ell-1 so the
 * columns form a basis. Extension divides by Q_ell(-n), which is nonzero
 * for all n >= m exactly when m clears the integer exponents at infinity
 * (m >= m_min of the exponent report).
 */
class HomogeneousBasis {
  public:
    HomogeneousBasis(const ThetaForm& tf, long m);

    Rat u(int j, long n);  /* j = 1..ell */
    long start() const { return m_; }
    int size() const { return tf_.ell; }

    /* Casoratian: det [u_j(n + ell - 1 - i)]_{i,j}, the top row most shifted. */
    Rat wronskian(long n);

    /* Signed minor with column j removed and rows n+ell-2 down to n:
     * D_j(n) = (-1)^(j+1) det [...]; the empty determinant (ell = 1) is 1.
     */
    Rat minor_d(int j, long n);

  private:
    ThetaForm tf_;
    long m_;
    std::vector<std::vector<Rat>> vals_;  /* vals_[n - m_][j - 1] */
    void extend(long n);
};

/* One-step Casoratian law W(n+1)/W(n) = (-1)^ell Q_0(-n)/Q_ell(-n). */
Rat casoratian_step(const ThetaForm& tf, long n);

/* Product form of W(n)/W(m) when both indicial polynomials split over Q:
 * ((-1)^ell g0/gl)^(n-m) prod_i (m+e_i)_(n-m) / prod_j (m+ell-f_j)_(n-m),
 * with e_i the exponents at 0 and f_j the exponents at infinity. Returns
 * nothing when a factor is irrational.
 */
std::optional<Rat> casoratian_ratio_closed(const ThetaForm& tf, long m, long n);

/* General solution of sum_j Q_j(-n) V(n+j) = g(n) (n >= m) with initial
 * mixing coefficients chi: V(n) = sum_j (chi_j + sum_{k=m+1}^n
 * D_j(k) g(k-1) / (Q_ell(1-k) W(k))) u_j(n).
 */
Rat general_solution_value(HomogeneousBasis& U, const ThetaForm& tf, const std::vector<Rat>& chi,
                           const std::function<Rat(long)>& g, long n);

}  // namespace gseed
