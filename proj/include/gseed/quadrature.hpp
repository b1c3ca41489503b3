#pragma once

#include <functional>
#include <vector>

namespace gseed {

/* Gauss-Legendre rule transplanted to [0,1]. Double precision throughout:
 * the integral cross-checks target 1e-8..1e-10 residuals, far above the
 * 1e-15 floor of the rule itself.
 */
struct QuadratureRule {
    std::vector<double> node;
    std::vector<double> weight;
};

/* Nodes and weights for the given order (cached; order >= 1). */
const QuadratureRule& gauss_legendre(int order);

/* Tensor-product integral of f over [0,1]^dim with order^dim evaluations. */
double integrate_cube(int dim, int order,
                      const std::function<double(const std::vector<double>&)>& f);

/* Escalates the order until two consecutive estimates agree to rel_tol
 * (relative to max(1, |I|)); returns the finest estimate either way.
 */
double integrate_cube_adaptive(int dim,
                               const std::function<double(const std::vector<double>&)>& f,
                               double rel_tol, int max_order = 96);

}  // namespace gseed
