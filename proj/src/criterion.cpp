#include "gseed/criterion.hpp"

#include <algorithm>
#include <cmath>

#include "gseed/asymptotics.hpp"
#include "gseed/decomposition.hpp"
#include "gseed/errors.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/parallel.hpp"

namespace gseed {

ShiftSelection shift_select(const std::vector<std::complex<double>>& c,
                            const std::vector<std::complex<double>>& zeta, long n) {
    size_t T = c.size();
    if (T == 0 || zeta.size() != T)
        throw input_error("shift select: need matching nonempty c and zeta lists");
    if (n < 0) throw input_error("shift select: need n >= 0");
    for (size_t t = 0; t < T; ++t) {
        if (std::abs(c[t]) == 0.0)
            throw input_error("shift select: c_" + std::to_string(t + 1) + " must be nonzero");
        if (std::fabs(std::abs(zeta[t]) - 1.0) > 1e-9)
            throw input_error("shift select: zeta_" + std::to_string(t + 1) +
                              " must lie on the unit circle");
    }
    for (size_t i = 0; i < T; ++i)
        for (size_t j = i + 1; j < T; ++j)
            if (std::abs(zeta[i] - zeta[j]) < 1e-12)
                throw input_error("shift select: zeta values must be pairwise distinct");

    std::complex<double> vandermonde(1.0, 0.0);
    for (size_t i = 0; i < T; ++i)
        for (size_t j = i + 1; j < T; ++j) vandermonde *= (zeta[j] - zeta[i]);
    double tfact = 1.0;
    for (size_t t = 2; t <= T; ++t) tfact *= (double)t;

    ShiftSelection pick;
    pick.threshold = std::abs(c[0]) * std::abs(vandermonde) / tfact;

    /* powers via the argument, stable for unimodular bases */
    std::vector<double> theta(T);
    for (size_t t = 0; t < T; ++t) theta[t] = std::arg(zeta[t]);

    double best = -1.0;
    int best_delta = 0;
    for (int delta = 0; delta < (int)T; ++delta) {
        std::complex<double> sum(0.0, 0.0);
        for (size_t t = 0; t < T; ++t) {
            double angle = (double)(n + delta) * theta[t];
            sum += c[t] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        double mag = std::abs(sum);
        if (mag > best) {
            best = mag;
            best_delta = delta;
        }
        if (mag >= pick.threshold * (1.0 - 1e-9)) {
            pick.delta = delta;
            pick.attained = mag;
            return pick;
        }
    }
    /* mathematically the maximum over T consecutive shifts meets the bound;
     * reaching this point means the scan lost to rounding, so return the
     * argmax and mark it */
    pick.delta = best_delta;
    pick.attained = best;
    pick.via_fallback = true;
    return pick;
}

DimensionBound dimension_bound(const Rat& a0, const Rat& b, int degree) {
    if (!(a0 > 0 && a0 < 1 && b > 1))
        throw input_error("dimension bound: need 0 < a0 < 1 < b");
    if (degree < 1) throw input_error("dimension bound: degree must be >= 1");

    DimensionBound result;
    double la = std::log(mpq_get_d(a0.get_mpq_t()));
    double lb = std::log(mpq_get_d(b.get_mpq_t()));
    double ratio = la / lb; /* negative */

    /* exact when a0^q == b^p for small integers: the log-ratio is p/q */
    for (long q = 1; q <= 64 && !result.exact; ++q) {
        double pd = ratio * (double)q;
        long p = (long)std::llround(pd);
        if (p >= 0) continue;
        if (std::fabs(pd - (double)p) > 1e-9 * (double)q) continue;
        if (rat_pow(a0, q) == rat_pow(b, p)) {
            result.exact = true;
            result.exact_value = (Rat(1) - Rat(p) / Rat(q)) / Rat(degree);
            result.value = mpq_get_d(result.exact_value.get_mpq_t());
            /* ceil of an exact rational */
            Int num = numerator(result.exact_value), den = denominator(result.exact_value);
            Int quotient;
            mpz_cdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            result.count = quotient.get_si();
        }
    }
    if (!result.exact) {
        result.value = (1.0 - ratio) / (double)degree;
        result.count = (long)std::ceil(result.value - 1e-12);
    }
    return result;
}

Certificate certify(const GFunctionSpec& spec, const Rat& alpha, int S,
                    const CertifyConfig& config) {
    if (S < 1) throw input_error("certify: need S >= 1");
    if (alpha == 0) throw input_error("certify: alpha must be nonzero");

    ThetaForm tf = theta_form(spec.op);
    DecompositionEngine engine(tf);
    CoefficientStream stream(tf, spec.initial);
    long ell0 = engine.ell0();

    Certificate cert;
    cert.label = spec.label;
    cert.alpha = alpha;
    cert.S = S;
    cert.bits = config.bits < 64 ? 64 : config.bits;
    cert.degree = 1;

    int r = config.r;
    if (r < 0) {
        /* the prescription r = floor(S / log(S)^2), clamped into [0, S] */
        if (S == 1) {
            r = 0;
        } else {
            double ls = std::log((double)S);
            r = (int)std::floor((double)S / (ls * ls));
            if (r > S) {
                r = S;
                cert.caveats.push_back("default r exceeded S at this small S; clamped to r = S");
            }
        }
    }
    if (r > S) throw input_error("certify: r must not exceed S");
    cert.r = r;

    long n1 = config.n1, n2 = config.n2;
    if (n1 == 0 && n2 == 0) {
        n1 = std::max(ell0 + 1, 30L);
        n2 = n1 + 30;
    }
    if (n1 < ell0) throw input_error("certify: window must start at or above ell0");
    if (n2 - n1 < 20) throw input_error("certify: window must span at least 20 points");
    cert.n1 = n1;
    cert.n2 = n2;

    /* shared series values; the per-n records reuse them */
    SeriesValues values = series_values(stream, ell0, S, tf.mu, alpha, cert.bits);

    long count = n2 - n1 + 1;
    std::vector<double> tau_log(count), coeff_log(count), recon_gap(count, -1e9);
    std::vector<CoefficientStream> worker(thread_budget(), stream);
    run_window(0, count, [&](long i) {
        long n = n1 + i;
        LinearFormRecord rec = build_linear_form(engine, worker[current_worker()], S, r, n,
                                                 alpha, cert.bits, &values);
        /* measure tau through the direct series: the reconstructed
         * combination cancels its huge terms down to ~a0^n and turns into
         * rounding noise once n log(1/a0) outruns the precision, while the
         * series sum never cancels catastrophically */
        BigFloat t = BigFloat(rec.Delta_n, cert.bits + 64) * abs(rec.direct);
        if (t.is_zero())
            throw verify_error("certify: tau_n vanished at n = " + std::to_string(n) +
                               "; raise bits");
        tau_log[i] = log(t).to_double();
        BigFloat mag = abs(rec.direct);
        if (!rec.residual.is_zero() && !mag.is_zero())
            recon_gap[i] = (log(rec.residual) - log(mag)).to_double();
        Int biggest(0);
        for (const auto& row : rec.p_int)
            for (const Int& v : row) biggest = std::max(biggest, Int(abs(v)));
        for (const Int& v : rec.p_tilde_int) biggest = std::max(biggest, Int(abs(v)));
        if (biggest == 0)
            throw verify_error("certify: all integer coefficients vanished at n = " +
                               std::to_string(n));
        coeff_log[i] = log(BigFloat(biggest, 64)).to_double();
    });
    cert.tau_log = tau_log;
    cert.coeff_log = coeff_log;

    double worst_gap = *std::max_element(recon_gap.begin(), recon_gap.end());
    if (worst_gap > -11.0) /* reconstruction within 2^-16 of the value itself */
        cert.caveats.push_back("the C/C~ reconstruction is cancellation-limited at " +
                               std::to_string(cert.bits) + " bits (relative gap up to 1e" +
                               std::to_string((long)std::lround(worst_gap / std::log(10.0))) +
                               "); tau is measured from the direct series");

    std::vector<long> ns(count);
    for (long i = 0; i < count; ++i) ns[i] = n1 + i;
    /* median slopes: the lcm-driven jumps in d_n make the four-parameter
     * least squares unusable on windows this short */
    GrowthFit fit_tau = robust_growth(ns, tau_log);
    GrowthFit fit_coeff = robust_growth(ns, coeff_log);
    cert.log_a0_emp = fit_tau.rate;
    cert.log_b_emp = fit_coeff.rate;
    cert.a0_emp = std::exp(fit_tau.rate);
    cert.b_emp = std::exp(fit_coeff.rate);
    cert.fit_spread_a0 = fit_tau.spread;
    cert.fit_spread_b = fit_coeff.spread;

    cert.caveats.push_back("heuristic: rates fitted on the finite window [" +
                           std::to_string(n1) + ", " + std::to_string(n2) +
                           "], not proved asymptotics");
    cert.caveats.push_back("denominator Delta_n is the measured lcm, not an a-priori bound");
    cert.caveats.push_back("bound concerns the span of the shifted values F_u^[s](alpha) "
                           "together with the derivative values (theta^u F)(alpha); the two "
                           "spaces differ by at most mu = " + std::to_string(tf.mu));

    if (cert.a0_emp < 1.0 && cert.b_emp > 1.0) {
        cert.has_bound = true;
        cert.bound = (1.0 - cert.log_a0_emp / cert.log_b_emp) / (double)cert.degree;
        cert.count = (long)std::ceil(cert.bound - 1e-12);
    } else {
        cert.has_bound = false;
        cert.caveats.push_back(cert.a0_emp >= 1.0
                                   ? "no Diophantine content at this S: |tau_n| does not decay "
                                     "(a0_emp >= 1); certificate withheld"
                                   : "integer coefficients do not grow (b_emp <= 1); "
                                     "certificate withheld");
    }
    return cert;
}

}  // namespace gseed
