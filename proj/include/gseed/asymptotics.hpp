#pragma once

#include <string>
#include <vector>

#include "gseed/complexf.hpp"
#include "gseed/series.hpp"

namespace gseed {

/* Saddle-point machinery for the growth rate of the tail forms
 * T_{S,r,n}(z) as n -> infinity.  Everything revolves around the algebraic
 * equation P(t) = z t^(S+1) - (r-t)(t+1)^S = 0: for 0 < |z| < 1 it has
 * exactly S roots with Re < -1/2 and a single root tau with Re > 1/2, and
 * that root drives the exponential rate through
 *
 *   e^phi = (r-tau)^r / (tau+1)^S
 *         = (z tau^(S+1))^r / (tau+1)^(S(r+1))
 *         = (r-tau)^(r+1) / (z tau^(S+1)),
 *
 * three forms that are equal whenever P(tau) = 0 and are cross-checked to
 * guard against branch mistakes (each factor is a single integer power, so
 * no logarithm of a possibly-negative quantity is ever taken).
 */
struct SaddleData {
    BigComplex tau;      /* the root with Re > 1/2 */
    BigComplex phi_exp;  /* e^phi at the saddle */
    BigComplex psi;      /* phi''(tau) = (S+1)/tau + 1/(r-tau) - S/(tau+1) */
    BigFloat rho;        /* |e^phi|, the per-singularity exponential rate */
    std::vector<BigComplex> phi_forms;  /* all three product forms, for audits */
    long bits = 0;
};

/* Newton iteration from the large-S seed tau0 = r - r z (r/(r+1))^S; if it
 * fails to settle in the right half-plane, falls back to computing all
 * roots and selecting the one with Re > 1/2.  The accepted root satisfies
 * |P(tau)| < 2^(-bits/2) |P'(tau)| |tau|.
 */
BigComplex saddle_point(int S, int r, const BigComplex& z, long bits);

SaddleData phi_data(int S, int r, const BigComplex& z, const BigComplex& tau, long bits);

/* Brute-force location of all S+1 roots of P, counted by half-plane. */
struct RootCensus {
    int re_below = 0;  /* Re < -1/2 */
    int re_above = 0;  /* Re > 1/2 */
    int total = 0;
};

RootCensus root_census(int S, int r, const BigComplex& z, long bits);

/* One singularity xi of the operator's leading coefficient contributes the
 * saddle datum at z = -alpha/xi; the largest |e^phi| over the singularities
 * is the predicted n-th-root growth of T_{S,r,n}(1/alpha).
 */
struct SingularityRate {
    BigComplex xi;
    BigComplex z;
    SaddleData saddle;
};

struct SaddleReport {
    int S = 0, r = 0;
    Rat alpha;
    std::vector<SingularityRate> rates;
    std::vector<size_t> dominant;  /* indices attaining the maximal rate */
    BigFloat a_pred;
    double log_a_pred = 0.0;
    bool within_crude_bound = false;  /* a_pred <= 1/r^(S-r) */
    std::vector<std::string> warnings;
    long bits = 0;
};

SaddleReport predict_growth(const DiffOperator& op, int S, int r, const Rat& alpha, long bits);

/* Empirical counterpart: evaluate T_n = T_{S,r,n}(1/alpha) over a window
 * and fit log|T_n| = c0 + n log_a + kappa log n + lambda log log n.  The
 * deliverable is log_a; the other parameters are nuisance terms absorbing
 * the subexponential factors.
 */
struct GrowthEstimate {
    long n1 = 0, n2 = 0;
    std::vector<double> samples;  /* log|T_n|/n for n in the window */
    double log_a_emp = 0.0;
    double intercept = 0.0, kappa = 0.0, lambda = 0.0;
    double residual_spread = 0.0;  /* max |fit - data| over the window */
    long bits = 0;
};

GrowthEstimate empirical_growth(CoefficientStream& A, int S, int r, const Rat& alpha, long n1,
                                long n2, long bits);

/* The fit shared by empirical_growth and the certificate pipeline:
 * y ~ intercept + rate*n + kappa*log n + lambda*log log n, least squares
 * over centered, orthogonalized columns.  rate is the deliverable.
 */
struct GrowthFit {
    double intercept = 0, rate = 0, kappa = 0, lambda = 0;
    double spread = 0; /* max |fit - data| */
};

GrowthFit fit_growth(const std::vector<long>& ns, const std::vector<double>& logs);

/* Median-of-pairwise-slopes rate with median-residual intercept (kappa and
 * lambda stay zero).  The four-parameter fit is the right tool on long
 * smooth windows, but its log n / log log n columns are nearly collinear
 * with n on a short window, and lcm-driven jumps in the data then blow the
 * nuisance coefficients up and drag the rate with them.  The median slope
 * ignores the jumps; the subexponential terms bias it only by O(1/n).
 */
GrowthFit robust_growth(const std::vector<long>& ns, const std::vector<double>& logs);

/* For series with nonnegative coefficients and real z > 1/R the tails obey a
 * two-sided n-th-root bound.  The upper rate is 1/r^(S-r).  The tabulated
 * lower rate is
 *   (1/(D^r z^r)) (r/(r+1))^(rS) / (r+1)^(S-r),
 * but the explicit term-by-term estimate behind it -- keep one power of the
 * derivative series, lower-bound the Beta integrals, apply Stirling --
 * only gives the smaller constant
 *   (1/(D^r z^r)) r^(r(S+1)) / (r+1)^(S(r+1)),
 * a factor ((r+1)/r)^r below the tabulated one.  The gap is real: for the
 * geometric series with S = 3, r = 2, z = 2 the saddle limit of |T_n|^(1/n)
 * is ~4.63e-3, strictly between the two constants.  Both lower rates are
 * reported, with a separate verdict for each pairing.  Any negative
 * coefficient in the inspected range disqualifies the premise.
 */
struct SandwichBounds {
    Rat lower_rate;        /* tabulated constant */
    Rat lower_rate_proven; /* constant the explicit estimate supports */
    Rat upper_rate;
    std::vector<double> root_values;  /* |T_n|^(1/n) over the window */
    bool holds = false;        /* tabulated lower <= all samples <= upper */
    bool holds_proven = false; /* proven lower <= all samples <= upper */
};

SandwichBounds nonneg_bounds(CoefficientStream& A, int S, int r, const Rat& z_real, const Rat& D,
                             long n1, long n2, long bits);

/* Independent route to the same number: for S <= 2 evaluates
 *   z^(-rn)/n!^r * integral over [0,1]^S of
 *       F^(rn)(t_1...t_S/z) prod_j t_j^(rn)(1-t_j)^n dt_j
 * by Gauss-Legendre quadrature and returns |integral - t_series|.
 */
double real_integral_check(CoefficientStream& A, int S, int r, long n, const Rat& z_real,
                           long bits);

}  // namespace gseed
