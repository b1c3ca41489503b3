#include "gseed/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "gseed/errors.hpp"

namespace gseed {

namespace {

/* Legendre P_n(x) and its derivative on [-1,1] by the three-term recurrence. */
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? p0 : p1;
    dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule build_rule(int order) {
    QuadratureRule rule;
    rule.node.resize(order);
    rule.weight.resize(order);
    for (int i = 0; i < order; ++i) {
        /* classic Chebyshev-like initial guess, then Newton */
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double p, dp;
        for (int it = 0; it < 64; ++it) {
            legendre_pair(order, x, p, dp);
            double step = p / dp;
            x -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        legendre_pair(order, x, p, dp);
        /* map [-1,1] -> [0,1]; the i-th node descends, store ascending */
        rule.node[order - 1 - i] = 0.5 * (x + 1.0);
        rule.weight[order - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
    if (order < 1) throw input_error("gauss_legendre: order must be >= 1");
    static std::map<int, QuadratureRule> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

double integrate_cube(int dim, int order,
                      const std::function<double(const std::vector<double>&)>& f) {
    if (dim < 1) throw input_error("integrate_cube: dimension must be >= 1");
    const QuadratureRule& rule = gauss_legendre(order);
    std::vector<int> idx(dim, 0);
    std::vector<double> t(dim);
    double total = 0.0;
    for (;;) {
        double w = 1.0;
        for (int d = 0; d < dim; ++d) {
            t[d] = rule.node[idx[d]];
            w *= rule.weight[idx[d]];
        }
        total += w * f(t);
        /* odometer over the lattice */
        int d = 0;
        while (d < dim && ++idx[d] == order) idx[d++] = 0;
        if (d == dim) break;
    }
    return total;
}

double integrate_cube_adaptive(int dim,
                               const std::function<double(const std::vector<double>&)>& f,
                               double rel_tol, int max_order) {
    double prev = 0.0;
    bool have_prev = false;
    double value = 0.0;
    for (int order = 16; order <= max_order; order = order + order / 2) {
        value = integrate_cube(dim, order, f);
        if (have_prev &&
            std::fabs(value - prev) <= rel_tol * std::max(1.0, std::fabs(value)))
            return value;
        prev = value;
        have_prev = true;
    }
    return value;
}

}  // namespace gseed
