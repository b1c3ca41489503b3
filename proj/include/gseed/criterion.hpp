#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gseed/series.hpp"

namespace gseed {

/* The pigeonhole behind the oscillating-form criterion: among the shifts
 * delta in {0..T-1} at least one exponential sum |sum_t c_t zeta_t^(n+delta)|
 * is >= |c_1 Delta_0| / T!, where Delta_0 is the Vandermonde determinant of
 * the zeta's.  shift_select returns the smallest such delta (with an argmax
 * fallback against floating-point ties, which satisfies the bound by the
 * same determinant expansion).
 */
struct ShiftSelection {
    int delta = 0;
    double attained = 0;   /* |sum| at the chosen shift */
    double threshold = 0;  /* |c_1 Delta_0| / T! */
    bool via_fallback = false;
};

ShiftSelection shift_select(const std::vector<std::complex<double>>& c,
                            const std::vector<std::complex<double>>& zeta, long n);

/* (1 - log a0 / log b) / degree for 0 < a0 < 1 < b.  When a0 and b are
 * multiplicatively commensurable (a0^q = b^p exactly) the log-ratio is the
 * rational p/q and the bound is computed exactly.
 */
struct DimensionBound {
    double value = 0;
    long count = 0;  /* ceil(value): "at least this many independent values" */
    bool exact = false;
    Rat exact_value; /* meaningful only when exact */
};

DimensionBound dimension_bound(const Rat& a0, const Rat& b, int degree);

/* End-to-end heuristic certificate: run the linear-form pipeline over a
 * window, fit the decay rate a0 of |tau_n| = Delta_n |T_n| and the growth
 * rate b of the integer coefficients, and evaluate the dimension bound.
 * Certificates are heuristic by construction (finite window, measured
 * denominators) and always carry caveats saying so.
 */
struct CertifyConfig {
    int r = -1;          /* negative: default to floor(S / log(S)^2), clamped */
    long n1 = 0, n2 = 0; /* window; 0,0 picks a default */
    long bits = 256;
};

struct Certificate {
    std::string label;
    Rat alpha;
    int S = 0, r = 0;
    long n1 = 0, n2 = 0;
    long bits = 0;
    int degree = 1;
    double a0_emp = 0, b_emp = 0;
    double log_a0_emp = 0, log_b_emp = 0;
    double fit_spread_a0 = 0, fit_spread_b = 0;
    bool has_bound = false;
    double bound = 0;
    long count = 0;
    std::vector<double> tau_log;   /* log |tau_n| over the window */
    std::vector<double> coeff_log; /* log max integer coefficient over the window */
    std::vector<std::string> caveats;
};

Certificate certify(const GFunctionSpec& spec, const Rat& alpha, int S, const CertifyConfig& config);

}  // namespace gseed
