#include "gseed/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "gseed/errors.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/parallel.hpp"
#include "gseed/polyroots.hpp"
#include "gseed/quadrature.hpp"

namespace gseed {

namespace {

void check_saddle_params(int S, int r, const BigComplex& z) {
    if (r < 1) throw input_error("saddle point: need r >= 1");
    if (S < r) throw input_error("saddle point: need S >= r");
    if (z.is_zero()) throw input_error("saddle point: z must be nonzero");
}

/* P(t) = z t^(S+1) - (r-t)(t+1)^S, evaluated without expanding */
BigComplex saddle_eval(int S, int r, const BigComplex& z, const BigComplex& t, long wp) {
    BigComplex rmt = BigComplex(Rat(r), Rat(0), wp) - t;
    BigComplex tp1 = t + BigComplex(Rat(1), Rat(0), wp);
    return z * pow_si(t, S + 1) - rmt * pow_si(tp1, S);
}

/* P'(t) = z(S+1)t^S + (t+1)^(S-1)((t+1) - S(r-t)) */
BigComplex saddle_eval_deriv(int S, int r, const BigComplex& z, const BigComplex& t, long wp) {
    BigComplex rmt = BigComplex(Rat(r), Rat(0), wp) - t;
    BigComplex tp1 = t + BigComplex(Rat(1), Rat(0), wp);
    BigComplex inner = tp1 - BigFloat(Rat(S), wp) * rmt;
    return BigFloat(Rat(S + 1), wp) * (z * pow_si(t, S)) + pow_si(tp1, S - 1) * inner;
}

/* ascending coefficients of P as explicit complex numbers (for root finding);
 * P(t) = (t - r)(t+1)^S + z t^(S+1), leading coefficient z + 1 */
std::vector<BigComplex> saddle_coeffs(int S, int r, const BigComplex& z, long wp) {
    std::vector<BigComplex> c(S + 2, BigComplex(wp));
    for (int k = 0; k <= S; ++k) {
        Rat bk(binomial((unsigned long)S, (unsigned long)k));
        c[k + 1] += BigComplex(bk, Rat(0), wp);
        c[k] -= BigComplex(Rat(r) * bk, Rat(0), wp);
    }
    c[S + 1] += z;
    return c;
}

bool residual_ok(int S, int r, const BigComplex& z, const BigComplex& t, long bits, long wp) {
    BigFloat lhs = abs(saddle_eval(S, r, z, t, wp));
    BigFloat rhs = pow2(-bits / 2, wp) * abs(saddle_eval_deriv(S, r, z, t, wp)) * abs(t);
    return lhs < rhs;
}

/* a handful of Newton steps; returns true if the step size collapsed */
bool newton_polish(int S, int r, const BigComplex& z, BigComplex& t, long wp, int max_iter) {
    BigFloat tiny = pow2(8 - wp, wp);
    for (int it = 0; it < max_iter; ++it) {
        BigComplex p = saddle_eval(S, r, z, t, wp);
        BigComplex dp = saddle_eval_deriv(S, r, z, t, wp);
        if (dp.is_zero()) return false;
        BigComplex step = p / dp;
        t = t - step;
        if (!t.is_finite()) return false;
        if (abs(step) < tiny * max(BigFloat(1L, wp), abs(t))) return true;
    }
    return false;
}

}  // namespace

BigComplex saddle_point(int S, int r, const BigComplex& z, long bits) {
    check_saddle_params(S, r, z);
    long wp = bits + 64;
    BigFloat half(Rat(1, 2), wp);

    /* seed from the large-S expansion tau = r - r z (r/(r+1))^S + ... */
    Rat scale = Rat(r) * rat_pow(Rat(r) / Rat(r + 1), S);
    BigComplex tau = BigComplex(Rat(r), Rat(0), wp) - BigFloat(scale, wp) * z;

    bool settled = newton_polish(S, r, z, tau, wp, 200);
    if (settled && tau.re() > half && residual_ok(S, r, z, tau, bits, wp))
        return tau;

    /* Newton strayed (small S, or a seed outside the basin): locate all
     * roots and keep the one in the right half-plane, then re-polish.
     */
    std::vector<BigComplex> roots = complex_roots(saddle_coeffs(S, r, z, wp), wp);
    std::vector<BigComplex> right;
    for (const BigComplex& root : roots)
        if (root.re() > half) right.push_back(root);
    if (right.size() != 1)
        throw verify_error("saddle point: expected exactly one root with Re > 1/2, found " +
                           std::to_string(right.size()));
    tau = right[0];
    newton_polish(S, r, z, tau, wp, 60);
    if (!(tau.re() > half))
        throw verify_error("saddle point: polished root left the half-plane Re > 1/2");
    if (!residual_ok(S, r, z, tau, bits, wp))
        throw verify_error("saddle point: residual test |P(tau)| < 2^(-bits/2)|P'(tau)||tau| failed");
    return tau;
}

SaddleData phi_data(int S, int r, const BigComplex& z, const BigComplex& tau, long bits) {
    check_saddle_params(S, r, z);
    long wp = bits + 64;
    BigComplex one(Rat(1), Rat(0), wp);
    BigComplex rmt = BigComplex(Rat(r), Rat(0), wp) - tau;
    BigComplex tp1 = tau + one;
    if (abs(rmt) < pow2(-bits / 2, wp))
        throw verify_error("phi data: tau is degenerate (r - tau almost 0)");

    BigComplex zt = z * pow_si(tau, S + 1);
    std::vector<BigComplex> forms;
    forms.push_back(pow_si(rmt, r) / pow_si(tp1, S));
    forms.push_back(pow_si(zt, r) / pow_si(tp1, (long)S * (r + 1)));
    forms.push_back(pow_si(rmt, r + 1) / zt);

    /* all three coincide iff P(tau) = 0; disagreement beyond the residual
     * scale means a branch or convergence bug */
    BigFloat ref = abs(forms[0]);
    BigFloat tol = pow2(-bits / 2, wp) * ref;
    for (int i = 1; i < 3; ++i)
        if (!(abs(forms[i] - forms[0]) < tol))
            throw verify_error("phi data: the three product forms for e^phi disagree");

    SaddleData data;
    data.tau = tau;
    data.phi_exp = forms[0];
    data.psi = BigComplex(Rat(S + 1), Rat(0), wp) / tau + one / rmt -
               BigComplex(Rat(S), Rat(0), wp) / tp1;
    data.rho = ref;
    data.phi_forms = std::move(forms);
    data.bits = bits;
    return data;
}

RootCensus root_census(int S, int r, const BigComplex& z, long bits) {
    check_saddle_params(S, r, z);
    long wp = bits + 64;
    std::vector<BigComplex> roots = complex_roots(saddle_coeffs(S, r, z, wp), wp);
    RootCensus census;
    census.total = (int)roots.size();
    BigFloat half(Rat(1, 2), wp);
    for (const BigComplex& root : roots) {
        if (root.re() < -half) census.re_below++;
        if (root.re() > half) census.re_above++;
    }
    return census;
}

SaddleReport predict_growth(const DiffOperator& op, int S, int r, const Rat& alpha, long bits) {
    if (r < 1) throw input_error("predict growth: need r >= 1");
    if (S < r) throw input_error("predict growth: need S >= r");
    require_inside_radius(op, alpha, "predict growth");
    long wp = bits + 64;

    /* finite singularities: nonzero roots of the leading coefficient */
    const RationalPoly& lead = op.P.back();
    int val = std::max(lead.valuation(), 0);
    std::vector<Rat> shifted(lead.coeffs().begin() + val, lead.coeffs().end());
    RationalPoly reduced((std::vector<Rat>(shifted)));
    if (reduced.degree() < 1)
        throw input_error("predict growth: leading coefficient has no nonzero root "
                          "(entire solutions, nothing to predict)");
    std::vector<BigComplex> xi = complex_roots(reduced, wp);

    SaddleReport report;
    report.S = S;
    report.r = r;
    report.alpha = alpha;
    report.bits = bits;
    BigComplex minus_alpha(-alpha, Rat(0), wp);
    BigFloat one(1L, wp);
    for (const BigComplex& x : xi) {
        SingularityRate rate;
        rate.xi = x;
        rate.z = minus_alpha / x;
        if (!(abs(rate.z) < one))
            throw verify_error("predict growth: |z_j| >= 1 for a singularity inside the "
                               "radius bound; inconsistent data");
        rate.saddle = phi_data(S, r, rate.z, saddle_point(S, r, rate.z, bits), bits);
        report.rates.push_back(std::move(rate));
    }

    BigFloat a_pred(0L, wp);
    for (const SingularityRate& rate : report.rates) a_pred = max(a_pred, rate.saddle.rho);
    report.a_pred = a_pred;
    report.log_a_pred = log(a_pred).to_double();

    BigFloat near = a_pred * (one - pow2(-20, wp));
    for (size_t j = 0; j < report.rates.size(); ++j)
        if (report.rates[j].saddle.rho >= near) report.dominant.push_back(j);
    if (report.dominant.size() > 1)
        report.warnings.push_back("near-degenerate dominance: " +
                                  std::to_string(report.dominant.size()) +
                                  " singularities within 2^-20 of the maximal rate");

    /* pairwise collision diagnostic on the e^phi values themselves */
    for (size_t i = 0; i < report.rates.size(); ++i)
        for (size_t j = i + 1; j < report.rates.size(); ++j) {
            BigFloat gap = abs(report.rates[i].saddle.phi_exp - report.rates[j].saddle.phi_exp);
            BigFloat span = max(report.rates[i].saddle.rho, report.rates[j].saddle.rho);
            if (gap < pow2(-20, wp) * span)
                report.warnings.push_back("e^phi values for singularities " + std::to_string(i) +
                                          " and " + std::to_string(j) + " nearly collide");
        }

    BigFloat crude(Rat(1) / Rat(int_pow(Int(r), (unsigned long)(S - r))), wp);
    report.within_crude_bound = report.a_pred <= crude * (one + pow2(-20, wp));
    return report;
}

/* long double is ample for windows of a few hundred points */
GrowthFit fit_growth(const std::vector<long>& ns, const std::vector<double>& ys) {
    if (ns.size() != ys.size() || ns.size() < 4)
        throw input_error("growth fit: need at least 4 (n, log) samples");
    size_t m = ns.size();
    std::vector<std::vector<long double>> col(3, std::vector<long double>(m));
    std::vector<long double> y(m);
    long double mean[3] = {0, 0, 0}, ymean = 0;
    for (size_t i = 0; i < m; ++i) {
        long double n = (long double)ns[i];
        col[0][i] = n;
        col[1][i] = std::log((long double)n);
        col[2][i] = std::log(std::log((long double)n));
        y[i] = ys[i];
        for (int j = 0; j < 3; ++j) mean[j] += col[j][i];
        ymean += y[i];
    }
    for (int j = 0; j < 3; ++j) mean[j] /= m;
    ymean /= m;
    for (size_t i = 0; i < m; ++i) {
        for (int j = 0; j < 3; ++j) col[j][i] -= mean[j];
        y[i] -= ymean;
    }

    /* QR by modified Gram-Schmidt, then back-substitution */
    long double R[3][3] = {{0}};
    std::vector<std::vector<long double>> q = col;
    for (int j = 0; j < 3; ++j) {
        long double norm = 0;
        for (size_t i = 0; i < m; ++i) norm += q[j][i] * q[j][i];
        norm = std::sqrt(norm);
        R[j][j] = norm;
        if (norm > 0)
            for (size_t i = 0; i < m; ++i) q[j][i] /= norm;
        for (int k = j + 1; k < 3; ++k) {
            long double dot = 0;
            for (size_t i = 0; i < m; ++i) dot += q[j][i] * q[k][i];
            R[j][k] = dot;
            for (size_t i = 0; i < m; ++i) q[k][i] -= dot * q[j][i];
        }
    }
    long double qty[3] = {0, 0, 0};
    for (int j = 0; j < 3; ++j)
        for (size_t i = 0; i < m; ++i) qty[j] += q[j][i] * y[i];
    long double c[3];
    for (int j = 2; j >= 0; --j) {
        long double acc = qty[j];
        for (int k = j + 1; k < 3; ++k) acc -= R[j][k] * c[k];
        c[j] = (R[j][j] > 0) ? acc / R[j][j] : 0;
    }

    GrowthFit fit;
    fit.rate = (double)c[0];
    fit.kappa = (double)c[1];
    fit.lambda = (double)c[2];
    fit.intercept = (double)(ymean - c[0] * mean[0] - c[1] * mean[1] - c[2] * mean[2]);
    long double spread = 0;
    for (size_t i = 0; i < m; ++i) {
        long double pred = fit.intercept + c[0] * (col[0][i] + mean[0]) +
                           c[1] * (col[1][i] + mean[1]) + c[2] * (col[2][i] + mean[2]);
        spread = std::max(spread, std::fabs((long double)ys[i] - pred));
    }
    fit.spread = (double)spread;
    return fit;
}

GrowthFit robust_growth(const std::vector<long>& ns, const std::vector<double>& ys) {
    if (ns.size() != ys.size() || ns.size() < 4)
        throw input_error("growth fit: need at least 4 (n, log) samples");
    size_t m = ns.size();
    std::vector<double> slopes;
    slopes.reserve(m * (m - 1) / 2);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (ns[j] != ns[i])
                slopes.push_back((ys[j] - ys[i]) / (double)(ns[j] - ns[i]));
    if (slopes.empty()) throw input_error("growth fit: all abscissas coincide");

    auto median = [](std::vector<double>& v) {
        size_t h = v.size() / 2;
        std::nth_element(v.begin(), v.begin() + h, v.end());
        double upper = v[h];
        if (v.size() % 2 == 1) return upper;
        std::nth_element(v.begin(), v.begin() + h - 1, v.begin() + h);
        return 0.5 * (v[h - 1] + upper);
    };

    GrowthFit fit;
    fit.rate = median(slopes);
    std::vector<double> resid(m);
    for (size_t i = 0; i < m; ++i) resid[i] = ys[i] - fit.rate * (double)ns[i];
    std::vector<double> centered = resid;
    fit.intercept = median(centered);
    double spread = 0;
    for (size_t i = 0; i < m; ++i)
        spread = std::max(spread, std::fabs(resid[i] - fit.intercept));
    fit.spread = spread;
    return fit;
}

GrowthEstimate empirical_growth(CoefficientStream& A, int S, int r, const Rat& alpha, long n1,
                                long n2, long bits) {
    if (n1 < 3) throw input_error("empirical growth: window must start at n >= 3");
    if (n2 - n1 < 20) throw input_error("empirical growth: window must span at least 20 points");
    if (alpha == 0) throw input_error("empirical growth: alpha must be nonzero");
    Rat z = Rat(1) / alpha;

    GrowthEstimate estimate;
    estimate.n1 = n1;
    estimate.n2 = n2;
    estimate.bits = bits;
    long count = n2 - n1 + 1;
    std::vector<long> ns(count);
    std::vector<double> logs(count);
    /* each worker sums its own copy of the stream; slots are disjoint */
    std::vector<CoefficientStream> worker(thread_budget(), A);
    run_window(0, count, [&](long i) {
        long n = n1 + i;
        BigFloat t = t_series(worker[current_worker()], S, r, n, z, bits);
        if (t.is_zero())
            throw verify_error("empirical growth: T_n vanished at n = " + std::to_string(n) +
                               "; raise bits");
        ns[i] = n;
        logs[i] = log(abs(t)).to_double();
    });
    for (long i = 0; i < count; ++i) estimate.samples.push_back(logs[i] / (double)ns[i]);
    GrowthFit fit = fit_growth(ns, logs);
    estimate.intercept = fit.intercept;
    estimate.log_a_emp = fit.rate;
    estimate.kappa = fit.kappa;
    estimate.lambda = fit.lambda;
    estimate.residual_spread = fit.spread;
    return estimate;
}

SandwichBounds nonneg_bounds(CoefficientStream& A, int S, int r, const Rat& z_real, const Rat& D,
                             long n1, long n2, long bits) {
    if (r < 1) throw input_error("sandwich bounds: need r >= 1");
    if (S < r) throw input_error("sandwich bounds: need S >= r");
    if (z_real <= 0) throw input_error("sandwich bounds: z must be a positive real");
    if (D <= 0) throw input_error("sandwich bounds: D must be positive");
    if (n1 < 1 || n2 < n1) throw input_error("sandwich bounds: bad window");

    /* the bounds are only valid for series with nonnegative coefficients */
    long scan = std::max(4 * n2, 200L);
    for (long k = 0; k <= scan; ++k)
        if (A.at(k) < 0)
            throw input_error("sandwich bounds: negative coefficient A_" + std::to_string(k) +
                              "; the nonnegativity bounds do not apply");

    SandwichBounds bounds;
    bounds.lower_rate = Rat(1) / (rat_pow(D, r) * rat_pow(z_real, r)) *
                        rat_pow(Rat(r) / Rat(r + 1), (long)r * S) /
                        Rat(int_pow(Int(r + 1), (unsigned long)(S - r)));
    bounds.lower_rate_proven = bounds.lower_rate * rat_pow(Rat(r) / Rat(r + 1), r);
    bounds.upper_rate = Rat(1) / Rat(int_pow(Int(r), (unsigned long)(S - r)));
    double lo = mpq_get_d(bounds.lower_rate.get_mpq_t());
    double lo_proven = mpq_get_d(bounds.lower_rate_proven.get_mpq_t());
    double hi = mpq_get_d(bounds.upper_rate.get_mpq_t());

    long count = n2 - n1 + 1;
    bounds.root_values.resize(count);
    std::vector<CoefficientStream> worker(thread_budget(), A);
    run_window(0, count, [&](long i) {
        BigFloat t = t_series(worker[current_worker()], S, r, n1 + i, z_real, bits);
        bounds.root_values[i] = std::exp(log(abs(t)).to_double() / (double)(n1 + i));
    });
    bounds.holds = true;
    bounds.holds_proven = true;
    for (double root : bounds.root_values) {
        if (!(root >= lo * (1 - 1e-9) && root <= hi * (1 + 1e-9))) bounds.holds = false;
        if (!(root >= lo_proven * (1 - 1e-9) && root <= hi * (1 + 1e-9)))
            bounds.holds_proven = false;
    }
    return bounds;
}

double real_integral_check(CoefficientStream& A, int S, int r, long n, const Rat& z_real,
                           long bits) {
    if (S < 1 || S > 2)
        throw input_error("real integral check: only S in {1, 2} is supported");
    if (r < 0 || r > S) throw input_error("real integral check: need 0 <= r <= S");
    if (n < 0) throw input_error("real integral check: need n >= 0");
    if (z_real <= 0) throw input_error("real integral check: z must be a positive real");

    double reference = t_series(A, S, r, n, z_real, bits).to_double();

    long rn = (long)r * n;
    double zd = mpq_get_d(z_real.get_mpq_t());
    double x_max = 1.0 / zd;

    /* Taylor coefficients of the rn-th derivative: (m+1)_rn A_{m+rn} */
    std::vector<double> c;
    double tail_scale = 0.0;
    for (long m = 0;; ++m) {
        if (m > 20000)
            throw verify_error("real integral check: derivative series too slow to converge "
                               "(z too close to the radius?)");
        Rat coeff = pochhammer(Rat(m + 1), (unsigned long)rn) * A.at(m + rn);
        double cd = mpq_get_d(coeff.get_mpq_t());
        c.push_back(cd);
        double term = std::fabs(cd) * std::pow(x_max, (double)m);
        tail_scale = std::max(tail_scale, term);
        if (m >= 64 && term < 1e-20 * std::max(1.0, tail_scale)) break;
    }

    auto integrand = [&](const std::vector<double>& t) {
        double x = 1.0 / zd;
        double weight = 1.0;
        for (int j = 0; j < S; ++j) {
            x *= t[j];
            weight *= std::pow(t[j], (double)rn) * std::pow(1.0 - t[j], (double)n);
        }
        double f = 0.0;
        for (size_t m = c.size(); m-- > 0;) f = f * x + c[m];
        return f * weight;
    };

    double integral = integrate_cube_adaptive(S, integrand, 1e-12, 96);
    double prefactor =
        std::pow(zd, -(double)rn) / std::pow(mpq_get_d(Rat(factorial((unsigned long)n)).get_mpq_t()), (double)r);
    return std::fabs(prefactor * integral - reference);
}

}  // namespace gseed
