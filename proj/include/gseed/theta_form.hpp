#pragma once

#include <vector>

#include "gseed/diff_operator.hpp"
#include "gseed/poly.hpp"

namespace gseed {

/* alpha * z^(mu - omega) L = sum_{j=0}^{ell} z^j q[j](T + j), where T = z d/dz,
 * alpha is the least positive integer clearing all denominators, each q[j]
 * has integer coefficients, q[0] and q[ell] are nonzero of degree mu, and
 * deg q[j] <= mu throughout.
 */
struct ThetaForm {
    int mu = 0;       // order of L
    int omega = 0;    // ord_0 of the leading coefficient
    int delta = 0;    // deg of the leading coefficient
    int ell = 0;      // delta - omega
    Int clearing_constant = 1;
    std::vector<RationalPoly> q;  // ell + 1 entries
    DiffOperator op;              // the operator this form was computed from
};

/* Rewrites L in the normal form above. Rejects operators where the degree
 * pattern fails (deg q[0] or deg q[ell] < mu: irregularity at 0 or infinity)
 * and operators with ell = 0.
 */
ThetaForm theta_form(const DiffOperator& L);

/* Exact image of z^p under L, p >= 0: (1/alpha) sum_j q[j](p+j) z^(p+j+omega-mu). */
RationalPoly monomial_action(const ThetaForm& tf, long p);

/* Local exponent data read off the theta form.
 *   at 0:        roots of q[0](X)
 *   at infinity: roots of q[ell](-X + ell)
 * ell0 = max(ell, largest integer exponent at infinity), and m = n - ell
 * is safe (q[ell](-m) != 0) for every m >= m_min = ell0 - ell + 1.
 */
struct ExponentReport {
    RationalRoots at_zero;
    RationalRoots at_infinity;
    std::vector<Int> integer_at_zero;      // sorted, with multiplicity
    std::vector<Int> integer_at_infinity;  // sorted, with multiplicity
    long ell0 = 0;
    long m_min = 1;
    bool fully_factored = true;  // false if some roots were left unfactored
};

ExponentReport exponent_report(const ThetaForm& tf);

struct StructureSummary {
    ThetaForm form;
    ExponentReport exponents;
};

StructureSummary analyze_operator(const DiffOperator& L);

}  // namespace gseed
