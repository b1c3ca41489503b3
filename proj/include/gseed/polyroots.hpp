#pragma once

#include <vector>

#include "gseed/complexf.hpp"
#include "gseed/poly.hpp"

namespace gseed {

/* All roots of sum_i c[i] X^i (c.back() != 0), Durand-Kerner iteration at
 * the working precision. Multiple roots come back as tight clusters; exact
 * multiplicity handling, where needed, is done upstream by rational
 * deflation. Throws verify_error if the iteration fails to settle.
 */
std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& c, mpfr_prec_t prec);

std::vector<BigComplex> complex_roots(const RationalPoly& p, mpfr_prec_t prec);

/* Round a BigFloat to the nearest integer. */
Int round_to_int(const BigFloat& x);

}  // namespace gseed
