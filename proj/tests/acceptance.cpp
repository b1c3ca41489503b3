/* Acceptance gate: one line per criterion, details indented below it,
 * nonzero exit if any criterion fails.  Tolerances and grids are pinned
 * here on purpose — edit this file, not the flags, to change the bar.
 */

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gseed/asymptotics.hpp"
#include "gseed/corpus.hpp"
#include "gseed/criterion.hpp"
#include "gseed/decomposition.hpp"
#include "gseed/errors.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/recurrence.hpp"
#include "gseed/series.hpp"
#include "gseed/theta_form.hpp"

using namespace gseed;

namespace {

struct criterion_failure {
    std::string what;
};

void req(bool ok, const std::string& what) {
    if (!ok) throw criterion_failure{what};
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

/* largest dyadic m / 2^k <= x with about 30 significant bits */
Rat dyadic_below(const BigFloat& x) {
    if (x.sign() <= 0) throw input_error("dyadic_below: need x > 0");
    long shift = 30 - x.exponent();
    BigFloat scaled = x.ldexp(shift);
    Int m;
    mpfr_get_z(m.get_mpz_t(), scaled.raw(), MPFR_RNDD);
    return Rat(m) * rat_pow(Rat(1, 2), shift);
}

/* rational alpha = R/2 rounded down, strictly inside the certified disc */
Rat alpha_for(const DiffOperator& op) {
    RadiusInfo ri = radius_lower_bound(op, 128);
    if (ri.entire) return Rat(1, 2);
    return dyadic_below(ri.lower.ldexp(-1));
}

struct Harness {
    int failures = 0;

    void run(int id, const char* name, double limit_s,
             const std::function<void(std::vector<std::string>&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::string> notes;
        bool ok = true;
        std::string why;
        try {
            body(notes);
        } catch (const criterion_failure& f) {
            ok = false;
            why = f.what;
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("unexpected exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && limit_s > 0 && secs > limit_s) {
            ok = false;
            why = fmt("runtime %.1fs exceeds the %.0fs budget", secs, limit_s);
        }
        std::printf("[%2d] %s  %-56s %7.2fs\n", id, ok ? "PASS" : "FAIL", name, secs);
        for (const std::string& n : notes) std::printf("       . %s\n", n.c_str());
        if (!ok) std::printf("       ! %s\n", why.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

const GoldenExample& corpus_entry(const std::string& label) {
    for (const GoldenExample& ex : golden_corpus())
        if (ex.label == label) return ex;
    throw input_error("no corpus entry labelled '" + label + "'");
}

/* ---- 1: golden structural rows ---------------------------------------- */

void c1_golden_rows(std::vector<std::string>& notes) {
    CorpusCheck cc = corpus_check(false, 0);
    req(cc.examples == 12, fmt("expected 12 corpus examples, found %d", cc.examples));
    req(cc.failures.empty(),
        "recomputation mismatch: " + (cc.failures.empty() ? "" : cc.failures.front()));
    notes.push_back(fmt("%d exact checks across 12 examples, all clean", cc.checks));

    int with_ell0_one = 0, with_ell0_two = 0;
    for (const GoldenExample& ex : golden_corpus()) {
        if (ex.ell0 == 1) ++with_ell0_one;
        if (ex.ell0 == 2) ++with_ell0_two;
    }
    req(with_ell0_one == 8 && with_ell0_two == 4,
        fmt("ell0 split is %d/%d, want 8 rows with ell0=1 and 4 with ell0=2", with_ell0_one,
            with_ell0_two));

    /* the character example, tabulated with b = 2 */
    const GoldenExample& chi = corpus_entry("chi4-b2");
    const int b = 2;
    notes.push_back(fmt("chi row recomputed from the definitions: mu=%d omega=%d delta=%d ell=%d "
                        "ell0=%ld",
                        chi.mu, chi.omega, chi.delta, chi.ell, chi.ell0));
    req(chi.mu == b + 1, fmt("chi: mu = %d, tabulated b+1 = %d", chi.mu, b + 1));
    req(chi.delta == b + 3, fmt("chi: delta = %d, tabulated b+3 = %d", chi.delta, b + 3));
    if (chi.omega != b + 2 || chi.ell != 1) {
        notes.push_back(fmt("tabulated row prints omega = b+2 = %d and ell = %d",
                            chi.published_omega, chi.published_ell));
        notes.push_back("the printed order-3 annihilator maps the series to z rather than to 0; "
                        "the corpus pins the corrected operator, which differs by a factor "
                        "(theta - 1) on the left");
        notes.push_back("either operator puts z-degrees {0, 2} on its theta-form, forcing "
                        "ell = 2 and omega = delta - ell = 3; omega = 4 with ell = 1 is not "
                        "attainable for this series");
        req(false, "tabulated (omega, ell) = (4, 1) is not reproduced: the definitions give "
                   "(3, 2)");
    }
}

/* ---- 2: decomposition identity ----------------------------------------- */

void c2_decomposition(std::vector<std::string>& notes) {
    int records = 0;
    for (const GoldenExample& ex : golden_corpus()) {
        ThetaForm tf = theta_form(ex.spec.op);
        DecompositionEngine E(tf);
        CoefficientStream A(tf, ex.spec.initial);
        Rat alpha = alpha_for(ex.spec.op);
        for (long n = 1; n <= 12; ++n)
            for (int s = 1; s <= 4; ++s) {
                const DecompositionRecord& rec = E.record(n, s);
                std::vector<Rat> res = decomposition_residual(A, tf, rec, n + 20);
                Rat at_alpha(0), power(1);
                for (size_t k = 0; k < res.size(); ++k) {
                    req(res[k] == 0, ex.label + fmt(": residual coefficient z^%zu nonzero at "
                                                    "(n=%ld, s=%d)",
                                                    k, n, s));
                    at_alpha += res[k] * power;
                    power *= alpha;
                }
                req(abs(BigFloat(at_alpha, 128)).to_double() < 1e-25,
                    ex.label + fmt(": residual at alpha exceeds 1e-25 for (n=%ld, s=%d)", n, s));
                ++records;
            }
    }
    notes.push_back(fmt("%d records over 12 specs, n <= 12, s <= 4: residual series identically "
                        "zero; evaluation at alpha = R/2 below 1e-25 at 128 bits",
                        records));
}

/* ---- 3: recurrence identity -------------------------------------------- */

void c3_recurrence(std::vector<std::string>& notes) {
    int instances = 0;
    for (const GoldenExample& ex : golden_corpus()) {
        ThetaForm tf = theta_form(ex.spec.op);
        CoefficientStream A(tf, ex.spec.initial);
        for (int s = 1; s <= tf.mu + 1; ++s) {
            InhomogeneousData T = shift_tables(tf, s);
            for (long n = 1; n <= 10; ++n) {
                std::vector<Rat> res = recurrence_residual(A, tf, T, n, n + tf.ell + 15);
                for (size_t k = 0; k < res.size(); ++k)
                    req(res[k] == 0, ex.label + fmt(": shift-identity residual z^%zu nonzero at "
                                                    "(s=%d, n=%ld)",
                                                    k, s, n));
                ++instances;
            }
        }
    }
    notes.push_back(fmt("%d (spec, s, n) instances with s <= mu+1, n <= 10: exact zero residuals",
                        instances));
}

/* ---- 4: tail series vs reduced linear form ----------------------------- */

void c4_linear_form(std::vector<std::string>& notes) {
    for (const GFunctionSpec& spec : {polylog_spec(), apery_spec()}) {
        ThetaForm tf = theta_form(spec.op);
        DecompositionEngine E(tf);
        CoefficientStream A(tf, spec.initial);
        Rat alpha = alpha_for(spec.op);
        long ell0 = E.ell0();
        /* 384 working bits: the reduced-side summands C(1/alpha) P(alpha)
         * grow like (d_n^S z^n)-sized integers for the apery spec
         * (z = 1/alpha ~ 68) and cancel down to the tiny form value, so a
         * narrow working precision would leave the measured residual
         * within sight of the 1e-20 bar (128 bits loses to it at n = 13) */
        SeriesValues sv = series_values(A, ell0, 4, tf.mu, alpha, 384);
        double worst = 0.0;
        int built = 0;
        for (int S = 1; S <= 4; ++S)
            for (int r = 0; r <= std::min(2, S); ++r)
                for (long n = ell0; n <= 15; ++n) {
                    LinearFormRecord rec = build_linear_form(E, A, S, r, n, alpha, 384, &sv);
                    double res = rec.residual.to_double();
                    worst = std::max(worst, res);
                    req(res < 1e-20, spec.label + fmt(": |t_series - reduced form| = %.3e at "
                                                      "(S=%d, r=%d, n=%ld)",
                                                      res, S, r, n));
                    ++built;
                }
        notes.push_back(spec.label +
                        fmt(": %d forms, worst |t_series - reduced form| = %.2e (alpha = %s)",
                            built, worst, rat_to_string(alpha).c_str()));
    }
}

/* ---- 5: Pade-type vanishing at infinity --------------------------------- */

void c5_pade(std::vector<std::string>& notes) {
    int checked = 0;
    for (const GFunctionSpec& spec : {polylog_spec(), apery_spec()}) {
        ThetaForm tf = theta_form(spec.op);
        DecompositionEngine E(tf);
        CoefficientStream A(tf, spec.initial);
        Rat alpha = alpha_for(spec.op);
        long ell0 = E.ell0();
        SeriesValues sv = series_values(A, ell0, 3, tf.mu, alpha, 128);
        for (int S = 1; S <= 3; ++S)
            for (int r = 0; r <= std::min(2, S); ++r)
                for (long n = ell0; n <= 8; ++n) {
                    LinearFormRecord rec = build_linear_form(E, A, S, r, n, alpha, 128, &sv);
                    pade_order_check(E, A, rec); /* throws on any defect */
                    ++checked;
                }
    }
    notes.push_back(fmt("%d forms: inverse-power coefficients vanish exactly below rn and the "
                        "reconstruction matches the direct expansion through rn+5",
                        checked));
}

/* ---- 6: universal denominator ------------------------------------------ */

void c6_integrality(std::vector<std::string>& notes) {
    int entries = 0;
    for (int S = 1; S <= 4; ++S)
        for (int r = 0; r <= std::min(2, S); ++r)
            for (long n = 0; n <= 30; ++n) {
                PartialFractionTable t = partial_fractions(S, r, n);
                Int dS = int_pow(lcm_upto(n), (unsigned long)S);
                for (long j = 1; j <= n + 1; ++j)
                    for (int s = 1; s <= S; ++s) {
                        Int den = denominator(t.c[(size_t)j - 1][(size_t)s - 1]);
                        req(mpz_divisible_p(dS.get_mpz_t(), den.get_mpz_t()) != 0,
                            fmt("d_n^S does not clear c[%ld][%d] at (S=%d, r=%d, n=%ld)", j, s, S,
                                r, n));
                        ++entries;
                    }
            }
    notes.push_back(fmt("%d coefficients on S <= 4, r <= 2, n <= 30: every denominator divides "
                        "d_n^S (exact)",
                        entries));
}

/* ---- 7: coefficient size bound ------------------------------------------ */

void c7_size_bound(std::vector<std::string>& notes) {
    double worst = 0.0;
    for (int S = 1; S <= 4; ++S)
        for (int r = 0; r <= std::min(2, S); ++r)
            for (long n = 0; n <= 30; ++n) {
                CoefficientBoundReport rep = coefficient_bound_check(partial_fractions(S, r, n));
                req(rep.integral, fmt("integrality flag dropped at (S=%d, r=%d, n=%ld)", S, r, n));
                req(rep.max_ratio <= 1.0,
                    fmt("|c| exceeds (rn+1) 2^S (r^r 2^(S+r+1))^n at (S=%d, r=%d, n=%ld), "
                        "ratio %.6f",
                        S, r, n, rep.max_ratio));
                worst = std::max(worst, rep.max_ratio);
            }
    notes.push_back(fmt("largest |c| relative to the bound (rn+1) 2^S (r^r 2^(S+r+1))^n: %.3e",
                        worst));
}

/* ---- 8: casoratian laws -------------------------------------------------- */

void c8_casoratian(std::vector<std::string>& notes) {
    int operators = 0, closed_checked = 0;
    auto run_one = [&](const DiffOperator& op, const std::string& label) {
        ThetaForm tf = theta_form(op);
        ExponentReport rep = exponent_report(tf);
        long mstar = rep.m_min;
        for (const Int& e : rep.integer_at_zero)
            if (e < 0) mstar = std::max(mstar, 1 - e.get_si());
        HomogeneousBasis U(tf, mstar);
        Rat Wm = U.wronskian(mstar);
        req(Wm != 0, label + ": W vanishes at the seed row");
        Rat prop = Wm;
        Rat sign = tf.ell % 2 ? Rat(-1) : Rat(1);
        for (long n = mstar; n < mstar + 50; ++n) {
            Rat Wn = U.wronskian(n);
            Rat Wn1 = U.wronskian(n + 1);
            req(Wn1 != 0, label + fmt(": W(%ld) = 0", n + 1));
            /* cross-multiplied one-step law, no divisions */
            req(Wn1 * tf.q[(size_t)tf.ell].eval(Rat(-n)) == sign * tf.q[0].eval(Rat(-n)) * Wn,
                label + fmt(": one-step law broken at n = %ld", n));
            prop *= casoratian_step(tf, n);
            req(Wn1 == prop, label + fmt(": determinant and propagated W differ at n = %ld", n));
            if (auto closed = casoratian_ratio_closed(tf, mstar, n + 1)) {
                req(*closed * Wm == Wn1,
                    label + fmt(": Pochhammer closed form differs at n = %ld", n + 1));
                ++closed_checked;
            }
        }
        ++operators;
    };
    for (const GoldenExample& ex : golden_corpus()) {
        run_one(ex.spec.op, ex.label);
        if (ex.published_row_differs) run_one(ex.structure_op, ex.label + " (printed operator)");
    }
    notes.push_back(fmt("%d operators x 50 consecutive n from the cleared start row: W(n) != 0, "
                        "determinant == one-step propagation, %d closed-form ratios confirmed",
                        operators, closed_checked));
}

/* ---- 9: saddle-point suite ----------------------------------------------- */

void c9_saddle(std::vector<std::string>& notes) {
    const long zb = 192;
    BigFloat pi = atan2(BigFloat(0.0, zb), BigFloat(-1.0, zb));
    std::vector<BigComplex> zs;
    for (int rad = 1; rad <= 4; ++rad)
        for (int arc = 0; arc < 5; ++arc) {
            BigFloat modulus(Rat(rad, 5), zb);
            BigFloat angle = pi * BigFloat(Rat(2 * arc, 5), zb);
            zs.emplace_back(modulus * cos(angle), modulus * sin(angle));
        }

    /* (a) brute-force census: S roots left of -1/2, one right of 1/2 */
    int censuses = 0;
    for (int S = 1; S <= 8; ++S)
        for (int r = 1; r <= std::min(2, S); ++r)
            for (size_t i = 0; i < zs.size(); ++i) {
                RootCensus c = root_census(S, r, zs[i], 160);
                req(c.total == S + 1 && c.re_below == S && c.re_above == 1,
                    fmt("census %d/%d/%d at (S=%d, r=%d, z sample %zu)", c.re_below, c.re_above,
                        c.total, S, r, i));
                ++censuses;
            }
    notes.push_back(fmt("(a) %d censuses over 20 z inside the punctured unit disc: always "
                        "S | 1 split",
                        censuses));

    /* (b) the three product forms of e^phi agree */
    double worst_rel = 0.0;
    const int pairs[3][2] = {{3, 1}, {6, 2}, {8, 2}};
    for (const auto& sr : pairs)
        for (size_t i = 0; i < zs.size(); ++i) {
            BigComplex tau = saddle_point(sr[0], sr[1], zs[i], zb);
            SaddleData sd = phi_data(sr[0], sr[1], zs[i], tau, zb);
            double scale = 0.0;
            for (const BigComplex& f : sd.phi_forms) scale = std::max(scale, abs(f).to_double());
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    double diff = abs(sd.phi_forms[(size_t)a] - sd.phi_forms[(size_t)b]).to_double();
                    worst_rel = std::max(worst_rel, diff / scale);
                }
        }
    req(worst_rel < 1e-25, fmt("(b) product forms of e^phi disagree, relative gap %.3e", worst_rel));
    notes.push_back(fmt("(b) three product forms of e^phi agree to %.2e relative", worst_rel));

    /* (c) phi''(tau) approaches (r+1)^S / (r^(S+1) z) as S grows */
    double prev = 1.0;
    for (int S : {20, 40, 80}) {
        const int r = 2;
        BigComplex z(Rat(1, 2), Rat(0), 256);
        BigComplex tau = saddle_point(S, r, z, 256);
        SaddleData sd = phi_data(S, r, z, tau, 256);
        Rat limit = rat_pow(Rat(r + 1), S) / (rat_pow(Rat(r), S + 1) * Rat(1, 2));
        double dev = std::fabs(abs(sd.psi).to_double() / BigFloat(limit, 256).to_double() - 1.0);
        double bar = S == 20 ? 1e-2 : S == 40 ? 1e-5 : 1e-10;
        req(dev < bar, fmt("(c) |psi/limit - 1| = %.3e at S = %d, bar %.0e", dev, S, bar));
        req(dev < prev, fmt("(c) deviation not decreasing at S = %d", S));
        notes.push_back(fmt("(c) S = %d: |phi''(tau) / ((r+1)^S / (r^(S+1) z)) - 1| = %.2e", S,
                            dev));
        prev = dev;
    }

    /* (d) predicted rate never beats the crude bound 1/r^(S-r) */
    struct Run {
        const char* which;
        int S, r;
        Rat alpha;
    };
    const GFunctionSpec poly = polylog_spec(), ap = apery_spec();
    const std::vector<Run> runs = {{"polylog", 4, 1, Rat(1, 2)}, {"polylog", 4, 2, Rat(1, 2)},
                                   {"polylog", 6, 1, Rat(1, 2)}, {"polylog", 6, 2, Rat(1, 2)},
                                   {"apery", 4, 1, Rat(1, 100)}, {"apery", 6, 2, Rat(1, 100)}};
    for (const Run& run : runs) {
        const DiffOperator& op = std::string(run.which) == "polylog" ? poly.op : ap.op;
        SaddleReport rep = predict_growth(op, run.S, run.r, run.alpha, zb);
        req(rep.within_crude_bound,
            fmt("(d) crude-bound flag clear on %s (S=%d, r=%d)", run.which, run.S, run.r));
        double crude = std::pow((double)run.r, -(double)(run.S - run.r));
        req(rep.a_pred.to_double() <= crude * (1 + 1e-12),
            fmt("(d) a_pred = %.6e exceeds 1/r^(S-r) = %.6e on %s (S=%d, r=%d)",
                rep.a_pred.to_double(), crude, run.which, run.S, run.r));
    }
    notes.push_back(fmt("(d) a_pred <= 1/r^(S-r) on %zu prediction runs", runs.size()));
}

/* ---- 10: growth reproduction -------------------------------------------- */

void c10_growth(std::vector<std::string>& notes) {
    GFunctionSpec spec = polylog_spec();
    ThetaForm tf = theta_form(spec.op);
    CoefficientStream A(tf, spec.initial);
    SaddleReport rep = predict_growth(spec.op, 6, 1, Rat(1, 2), 512);
    req(rep.within_crude_bound, "crude-bound flag clear on the prediction run");
    GrowthEstimate est = empirical_growth(A, 6, 1, Rat(1, 2), 150, 200, 512);
    double dev = std::fabs(est.log_a_emp - rep.log_a_pred) / std::fabs(rep.log_a_pred);
    notes.push_back(fmt("log a_pred = %.6f, log a_emp = %.6f over n in [150, 200] at 512 bits",
                        rep.log_a_pred, est.log_a_emp));
    notes.push_back(fmt("relative deviation %.2e (bar 0.05), fit spread %.2e", dev,
                        est.residual_spread));
    req(dev < 0.05, fmt("relative deviation %.4f exceeds 0.05", dev));
}

/* ---- 11: positive-coefficient sandwich ----------------------------------- */

void c11_sandwich(std::vector<std::string>& notes) {
    GFunctionSpec spec = polylog_spec();
    ThetaForm tf = theta_form(spec.op);
    CoefficientStream A(tf, spec.initial);
    SandwichBounds b = nonneg_bounds(A, 3, 2, Rat(2), Rat(1), 50, 150, 192);
    double lo_obs = *std::min_element(b.root_values.begin(), b.root_values.end());
    double hi_obs = *std::max_element(b.root_values.begin(), b.root_values.end());
    SaddleReport rep = predict_growth(spec.op, 3, 2, Rat(1, 2), 192);
    notes.push_back(fmt("|T_n|^(1/n) over n in [50, 150]: [%.4e, %.4e]; saddle limit %.4e",
                        lo_obs, hi_obs, rep.a_pred.to_double()));
    notes.push_back(fmt("tabulated rates: lower %s = %.4e, upper %s = %.4e",
                        rat_to_string(b.lower_rate).c_str(),
                        BigFloat(b.lower_rate, 64).to_double(),
                        rat_to_string(b.upper_rate).c_str(),
                        BigFloat(b.upper_rate, 64).to_double()));
    notes.push_back(fmt("the explicit term-by-term estimate behind that constant only supports "
                        "%s = %.4e (a factor (3/2)^2 smaller), and that sandwich holds: %s",
                        rat_to_string(b.lower_rate_proven).c_str(),
                        BigFloat(b.lower_rate_proven, 64).to_double(),
                        b.holds_proven ? "yes" : "no"));
    notes.push_back("every sample sits below the tabulated lower constant and the saddle limit "
                    "sits strictly between the two constants, so the tabulated rate cannot hold "
                    "at any n in the window or asymptotically");
    req(b.holds_proven, "the supportable lower rate fails on the window");
    req(b.holds, "samples fall outside [tabulated lower, upper] on the window");
}

/* ---- 12: real-integral identity ------------------------------------------ */

void c12_integral(std::vector<std::string>& notes) {
    GFunctionSpec spec = polylog_spec();
    ThetaForm tf = theta_form(spec.op);
    CoefficientStream A(tf, spec.initial);
    double worst = 0.0;
    int combos = 0;
    for (int S : {1, 2})
        for (int r = 0; r <= std::min(1, S); ++r)
            for (long n = 0; n <= 3; ++n) {
                double err = real_integral_check(A, S, r, n, Rat(2), 192);
                worst = std::max(worst, err);
                req(err < 1e-8,
                    fmt("quadrature vs series gap %.3e at (S=%d, r=%d, n=%ld)", err, S, r, n));
                ++combos;
            }
    notes.push_back(fmt("%d combinations at z = 2: worst quadrature-vs-series gap %.2e", combos,
                        worst));
}

/* ---- 13: shift selection -------------------------------------------------- */

void c13_shift(std::vector<std::string>& notes) {
    std::mt19937 gen(20260814);
    std::uniform_int_distribution<int> t_dist(2, 4);
    std::uniform_int_distribution<long> n_dist(0, 100000);
    std::uniform_real_distribution<double> mag(0.1, 2.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::acos(-1.0));
    int fallbacks = 0;
    double min_margin = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        int T = t_dist(gen);
        std::vector<std::complex<double>> c((size_t)T), zeta((size_t)T);
        for (auto& v : c) v = std::polar(mag(gen), phase(gen));
        for (int attempt = 0;; ++attempt) {
            req(attempt < 1000, "could not draw separated unimodular points");
            for (auto& z : zeta) z = std::polar(1.0, phase(gen));
            double sep = 1e300;
            for (size_t i = 0; i < zeta.size(); ++i)
                for (size_t j = i + 1; j < zeta.size(); ++j)
                    sep = std::min(sep, std::abs(zeta[i] - zeta[j]));
            if (sep > 0.05) break;
        }
        long n = n_dist(gen);
        ShiftSelection sel = shift_select(c, zeta, n);
        req(sel.delta >= 0 && sel.delta < T, fmt("trial %d: shift %d outside [0, T)", trial,
                                                 sel.delta));
        req(sel.attained >= sel.threshold * (1.0 - 1e-9),
            fmt("trial %d: attained %.6e below threshold %.6e", trial, sel.attained,
                sel.threshold));
        if (sel.via_fallback) ++fallbacks;
        if (sel.threshold > 0) min_margin = std::min(min_margin, sel.attained / sel.threshold);
    }
    notes.push_back(fmt("1000 trials, T in {2, 3, 4}: |sum| >= |c_1 Delta_0| / T! throughout; "
                        "smallest attained/threshold = %.3f, fallback path used %d times",
                        min_margin, fallbacks));
}

/* ---- 14: dimension-bound arithmetic ---------------------------------------- */

void c14_dimension(std::vector<std::string>& notes) {
    DimensionBound a = dimension_bound(Rat(1, 4), Rat(4), 1);
    req(a.exact && a.exact_value == Rat(2) && a.count == 2,
        "dimension_bound(1/4, 4, 1) must be exactly 2");
    DimensionBound b = dimension_bound(Rat(1, 8), Rat(2), 2);
    req(b.exact && b.exact_value == Rat(2) && b.count == 2,
        "dimension_bound(1/8, 2, 2) must be exactly 2");

    std::mt19937 gen(99173);
    std::uniform_int_distribution<long> num(2, 60);
    std::uniform_int_distribution<int> deg(1, 3), kpow(2, 4);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        long p = num(gen), q = num(gen);
        if (p == q) ++q;
        Rat a0 = p < q ? Rat(p, q) : Rat(q, p);
        long u = num(gen), v = num(gen);
        if (u == v) ++u;
        Rat bb = u > v ? Rat(u, v) : Rat(v, u);
        int m = deg(gen), k = kpow(gen);
        DimensionBound base = dimension_bound(a0, bb, m);
        DimensionBound powered = dimension_bound(rat_pow(a0, k), rat_pow(bb, k), m);
        double diff = std::fabs(base.value - powered.value);
        worst = std::max(worst, diff);
        req(diff < 1e-12 * std::max(1.0, std::fabs(base.value)),
            fmt("trial %d: value drifts by %.3e under (a0, b) -> (a0^%d, b^%d)", trial, diff, k,
                k));
        req(base.count == powered.count, fmt("trial %d: integer count changed under powering",
                                             trial));
    }
    notes.push_back(fmt("both pinned exact cases give 2; 200 random (a0, b) -> (a0^k, b^k) "
                        "trials drift at most %.1e",
                        worst));
}

}  // namespace

int main() {
    Harness h;
    std::printf("acceptance gate: 14 criteria, exact tolerances pinned in tests/acceptance.cpp\n");
    h.run(1, "golden structural rows (exact)", 5.0, c1_golden_rows);
    h.run(2, "decomposition identity, 12 specs, n <= 12, s <= 4", 120.0, c2_decomposition);
    h.run(3, "shift identity residuals, s <= mu+1, n <= 10", 0.0, c3_recurrence);
    h.run(4, "tail series equals reduced linear form (1e-20)", 0.0, c4_linear_form);
    h.run(5, "Pade-type vanishing to order rn (exact)", 0.0, c5_pade);
    h.run(6, "d_n^S clears partial-fraction tables (exact)", 0.0, c6_integrality);
    h.run(7, "partial-fraction size bound (exact)", 0.0, c7_size_bound);
    h.run(8, "casoratian determinant vs one-step law (exact)", 0.0, c8_casoratian);
    h.run(9, "saddle suite: census, e^phi forms, psi limit, crude bound", 0.0, c9_saddle);
    h.run(10, "growth reproduction, geometric series, S=6, r=1", 600.0, c10_growth);
    h.run(11, "positive-coefficient sandwich at the tabulated rates", 0.0, c11_sandwich);
    h.run(12, "quadrature route to the tail forms (1e-8)", 0.0, c12_integral);
    h.run(13, "shift selection meets the pigeonhole bound, 1000 trials", 0.0, c13_shift);
    h.run(14, "dimension-bound arithmetic and scale invariance", 0.0, c14_dimension);
    if (h.failures)
        std::printf("acceptance: %d of 14 criteria failed\n", h.failures);
    else
        std::printf("acceptance: all 14 criteria passed\n");
    return h.failures ? 1 : 0;
}
