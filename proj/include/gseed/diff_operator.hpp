#pragma once

#include <string>
#include <vector>

#include "gseed/poly.hpp"

namespace gseed {

/* L = sum_k P[k](z) (d/dz)^k with polynomial coefficients, P.back() != 0.
 * Order 0 (a plain multiplication operator) is legal as an intermediate
 * value inside the expression parser but rejected as a final operator.
 */
struct DiffOperator {
    std::vector<RationalPoly> P;

    int order() const { return (int)P.size() - 1; }
    bool is_zero() const { return P.empty(); }
    const RationalPoly& leading() const { return P.back(); }

    bool operator==(const DiffOperator& o) const { return P == o.P; }
};

DiffOperator op_add(const DiffOperator& a, const DiffOperator& b);
DiffOperator op_sub(const DiffOperator& a, const DiffOperator& b);
/* composition a(b(.)), Leibniz expanded so coefficients stay polynomial */
DiffOperator op_mul(const DiffOperator& a, const DiffOperator& b);
DiffOperator op_pow(const DiffOperator& a, unsigned e);

/* exact action on a polynomial */
RationalPoly apply_operator(const DiffOperator& L, const RationalPoly& f);

/* Expression text over z, D (= d/dz), T (= z d/dz), integer and a/b
 * rational literals, + - * / ^ and parentheses. '/' only by a nonzero
 * constant; '^' only with a nonnegative integer exponent. The result must
 * be nonzero and of order >= 1.
 */
DiffOperator parse_operator(const std::string& text);

/* Coefficient-list document: P as a list of coefficient string lists,
 * constant term first, P[k] belonging to (d/dz)^k.
 */
DiffOperator operator_from_coefficients(const std::vector<std::vector<std::string>>& P);

/* theta prod_j (theta + b_j - 1) - z prod_i (theta + a_i), the operator
 * annihilating the (p+1)F_p series with parameters a (length p+1) and b
 * (length p). Lower parameters must not be nonpositive integers.
 */
DiffOperator hypergeometric_operator(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace gseed
