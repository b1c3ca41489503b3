#pragma once

#include <vector>

#include "gseed/decomposition.hpp"
#include "gseed/series.hpp"

namespace gseed {

/* Exact expansion
 *   n!^(S-r) (k-rn+1)_rn / (k+1)_(n+1)^S = sum_{j=1}^{n+1} sum_{s=1}^S c[j][s]/(k+j)^s,
 * computed through Taylor jets at k = -j (no linear solve involved).
 */
struct PartialFractionTable {
    int S = 0;
    int r = 0;
    long n = 0;
    std::vector<std::vector<Rat>> c;  /* c[j-1][s-1] */
};

PartialFractionTable partial_fractions(int S, int r, long n);

/* Exact check of the expansion above at S(n+1)+1 integer sample points
 * k = 0, 1, ...: enough points to separate two proper rational functions
 * with denominator degree S(n+1). Throws verify_error on mismatch.
 */
void partial_fraction_reconstruction_check(const PartialFractionTable& t);

/* |c[j][s]| <= (rn+1) 2^S (r^r 2^(S+r+1))^n for every entry (0^0 = 1), and
 * d_n^S c[j][s] is an integer. Violations throw verify_error.
 */
struct CoefficientBoundReport {
    double max_ratio = 0.0;  /* largest |c| / bound */
    bool integral = true;
};

CoefficientBoundReport coefficient_bound_check(const PartialFractionTable& t);

/* T_{S,r,n}(z) = n!^(S-r) sum_k (k-rn+1)_rn / (k+1)_(n+1)^S A_k z^-k,
 * summed directly for |z| > 1/R; the first rn terms vanish identically.
 */
BigFloat t_series(CoefficientStream& A, int S, int r, long n, const Rat& z, long bits);

/* F_u^[s](alpha) for u = 1..ell0, s = 1..S, and (theta^u F)(alpha) for
 * u = 0..mu-1 — the evaluation vector a linear form record is paired with.
 */
struct SeriesValues {
    Rat alpha;
    long bits = 0;
    std::vector<std::vector<BigFloat>> f;
    std::vector<BigFloat> theta;
};

SeriesValues series_values(CoefficientStream& A, long ell0, int S, int mu, const Rat& alpha,
                           long bits);

/* T_{S,r,n}(z) = sum_{u,s} C[u][s](z) F_u^[s](1/z)
 *              + sum_u C_tilde[u](z) z^(-S(ell-1)) (theta^u F)(1/z),
 * with deg C <= n+1 and deg C_tilde <= n+1+S(ell-1). Delta_n is the least
 * positive integer clearing every evaluated coefficient at z = 1/alpha, so
 * p_int/p_tilde_int are exact integers and
 *   tau = Delta_n T(1/alpha) = sum p_int F_u^[s](alpha)
 *                            + sum p_tilde_int alpha^(S(ell-1)) theta^u F(alpha).
 * Delta_n is checked to divide q0^(n+1+S(ell-1)) d_n^S D_emp, the a-priori
 * shape of the clearing factor (q0 = |numerator of alpha|, D_emp the
 * cumulative decomposition denominator).
 */
struct LinearFormRecord {
    int S = 0;
    int r = 0;
    long n = 0;
    Rat alpha;
    std::vector<std::vector<RationalPoly>> C;
    std::vector<RationalPoly> C_tilde;
    Int Delta_n = 1;
    Int delta_divisor_bound = 1;
    std::vector<std::vector<Int>> p_int;
    std::vector<Int> p_tilde_int;
    BigFloat value;     /* C/C_tilde evaluation of T(1/alpha) */
    BigFloat direct;    /* t_series reference */
    BigFloat residual;  /* |value - direct| */
    BigFloat tau;       /* Delta_n * value */
    long bits = 0;
};

LinearFormRecord build_linear_form(DecompositionEngine& E, CoefficientStream& A, int S, int r,
                                   long n, const Rat& alpha, long bits,
                                   const SeriesValues* cached = nullptr);

/* Exact 1/z-expansion comparison: T's Laurent coefficients vanish for
 * k < rn, and the C/C_tilde combination reproduces them through k = rn+5.
 * Throws verify_error naming the first offending index.
 */
void pade_order_check(DecompositionEngine& E, CoefficientStream& A, const LinearFormRecord& rec);

}  // namespace gseed
