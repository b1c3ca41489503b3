#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"

#include "gseed/asymptotics.hpp"
#include "gseed/corpus.hpp"
#include "gseed/criterion.hpp"
#include "gseed/decomposition.hpp"
#include "gseed/errors.hpp"
#include "gseed/linear_forms.hpp"
#include "gseed/report.hpp"
#include "gseed/series.hpp"
#include "gseed/theta_form.hpp"

namespace {

using namespace gseed;

struct OutputOpts {
    std::string out_path;
    bool json = false;
};

/* --out writes the structured report to a file; --json mirrors it to
 * stdout in place of the terse human summary. */
void emit(const Json& doc, const OutputOpts& opts, const std::function<void()>& human) {
    if (!opts.out_path.empty()) write_report(doc, opts.out_path);
    if (opts.json)
        write_report(doc, "");
    else
        human();
}

std::string spec_label(const GFunctionSpec& spec, const std::string& path) {
    return spec.label.empty() ? path : spec.label;
}

void parse_window(const std::string& text, long& n1, long& n2) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw input_error("window must be A:B with integers A <= B, got: " + text);
    try {
        n1 = std::stol(text.substr(0, colon));
        n2 = std::stol(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw input_error("window must be A:B with integers A <= B, got: " + text);
    }
    if (n1 > n2) throw input_error("window must satisfy A <= B, got: " + text);
}

void require_bits(long bits) {
    if (bits < 64) throw input_error("bits must be at least 64");
}

std::string roots_line(const RationalRoots& rr) {
    std::string s;
    for (const auto& [root, mult] : rr.roots)
        for (int i = 0; i < mult; ++i) {
            if (!s.empty()) s += ", ";
            s += rat_to_string(root);
        }
    return s.empty() ? "(none over Q)" : s;
}

int run_analyze(const std::string& spec_path, const OutputOpts& out) {
    GFunctionSpec spec = load_spec(spec_path);
    StructureSummary s = analyze_operator(spec.op);
    Json doc = report_structure(spec_label(spec, spec_path), s);
    emit(doc, out, [&] {
        std::printf("label: %s\n", spec_label(spec, spec_path).c_str());
        std::printf("theta form: mu=%ld omega=%ld delta=%ld ell=%ld\n", (long)s.form.mu,
                    (long)s.form.omega, (long)s.form.delta, (long)s.form.ell);
        std::printf("exponents at 0: %s\n", roots_line(s.exponents.at_zero).c_str());
        std::printf("exponents at infinity: %s\n", roots_line(s.exponents.at_infinity).c_str());
        std::printf("ell0 = %ld, m_min = %ld\n", s.exponents.ell0, s.exponents.m_min);
        if (!s.exponents.fully_factored)
            std::printf("note: an indicial polynomial has irrational roots; "
                        "only its rational part is listed\n");
    });
    return 0;
}

int run_coeffs(const std::string& spec_path, long n, const OutputOpts& out) {
    if (n < 0) throw input_error("coefficient count must be nonnegative");
    GFunctionSpec spec = load_spec(spec_path);
    CoefficientStream A(theta_form(spec.op), spec.initial);
    Json doc = report_coefficients(spec_label(spec, spec_path), A, n);
    emit(doc, out, [&] {
        for (long k = 0; k <= n; ++k)
            std::printf("A_%ld = %s\n", k, rat_to_string(A.at(k)).c_str());
    });
    return 0;
}

int run_decompose(const std::string& spec_path, long n, int s, const OutputOpts& out) {
    GFunctionSpec spec = load_spec(spec_path);
    if (s < 1) throw input_error("level s must be at least 1");
    if (n < 1) throw input_error("shift n must be at least 1");
    ThetaForm tf = theta_form(spec.op);
    DecompositionEngine E(tf);
    const DecompositionRecord& rec = E.record(n, s);
    CoefficientStream A(tf, spec.initial);
    long N = n + (long)s * (long)std::max(tf.ell, 1) + 10;
    std::vector<Rat> residual = decomposition_residual(A, tf, rec, N);
    bool exact = true;
    for (const Rat& v : residual)
        if (v != 0) exact = false;
    Json doc = report_decomposition(spec_label(spec, spec_path), rec, residual);
    emit(doc, out, [&] {
        std::printf("label: %s\n", spec_label(spec, spec_path).c_str());
        std::printf("record n=%ld s=%d: %zu base rows, %zu polynomial parts\n", rec.n, rec.s,
                    rec.p.size(), rec.q.size());
        long qd = -1;
        for (const RationalPoly& qu : rec.q) qd = std::max<long>(qd, qu.degree());
        std::printf("max deg q = %ld (bound n + s(ell-1) = %ld)\n", qd,
                    n + (long)s * (tf.ell - 1));
        std::printf("series residual through z^%ld: %s\n", N - 1,
                    exact ? "identically zero" : "NONZERO");
    });
    if (!exact) throw verify_error("decomposition residual is nonzero");
    return 0;
}

int run_linform(const std::string& spec_path, int S, int r, long n, const std::string& alpha_text,
                long bits, const OutputOpts& out) {
    require_bits(bits);
    if (S < 1) throw input_error("S must be at least 1");
    if (r < 0 || r > S) throw input_error("need 0 <= r <= S");
    if (n < 0) throw input_error("n must be nonnegative");
    Rat alpha = rat_from_string(alpha_text);
    GFunctionSpec spec = load_spec(spec_path);
    ThetaForm tf = theta_form(spec.op);
    DecompositionEngine E(tf);
    CoefficientStream A(tf, spec.initial);
    LinearFormRecord rec = build_linear_form(E, A, S, r, n, alpha, bits);
    Json doc = report_linear_form(spec_label(spec, spec_path), rec);
    emit(doc, out, [&] {
        std::printf("label: %s\n", spec_label(spec, spec_path).c_str());
        std::printf("S=%d r=%d n=%ld alpha=%s bits=%ld\n", rec.S, rec.r, rec.n,
                    rat_to_string(rec.alpha).c_str(), rec.bits);
        std::printf("T(1/alpha)   = %s\n", rec.value.to_string(30).c_str());
        std::printf("series check = %s\n", rec.direct.to_string(30).c_str());
        std::printf("|difference| = %s\n", rec.residual.to_string(8).c_str());
        std::printf("Delta_n      = %s\n", rec.Delta_n.get_str().c_str());
        std::printf("tau_n        = %s\n", rec.tau.to_string(30).c_str());
    });
    return 0;
}

int run_asymp(const std::string& spec_path, int S, int r, const std::string& alpha_text, long bits,
              const std::string& window, const OutputOpts& out) {
    require_bits(bits);
    if (S < 1) throw input_error("S must be at least 1");
    if (r < 1 || r > S) throw input_error("need 1 <= r <= S for the saddle-point model");
    Rat alpha = rat_from_string(alpha_text);
    GFunctionSpec spec = load_spec(spec_path);
    SaddleReport rep = predict_growth(spec.op, S, r, alpha, bits);
    Json doc = report_saddle(spec_label(spec, spec_path), rep);

    bool have_emp = !window.empty();
    GrowthEstimate est;
    if (have_emp) {
        long n1 = 0, n2 = 0;
        parse_window(window, n1, n2);
        ThetaForm tf = theta_form(spec.op);
        CoefficientStream A(tf, spec.initial);
        est = empirical_growth(A, S, r, alpha, n1, n2, bits);
        doc["empirical"] = report_empirical(est);
        doc["log_deviation"] = std::fabs(est.log_a_emp - rep.log_a_pred);
    }

    emit(doc, out, [&] {
        std::printf("label: %s\n", spec_label(spec, spec_path).c_str());
        std::printf("S=%d r=%d alpha=%s bits=%ld\n", rep.S, rep.r,
                    rat_to_string(rep.alpha).c_str(), rep.bits);
        std::printf("singularities contributing: %zu (dominant: %zu)\n", rep.rates.size(),
                    rep.dominant.size());
        std::printf("a_pred       = %s\n", rep.a_pred.to_string(20).c_str());
        std::printf("log a_pred   = %.12g\n", rep.log_a_pred);
        std::printf("crude bound 1/r^(S-r) respected: %s\n",
                    rep.within_crude_bound ? "yes" : "NO");
        for (const std::string& w : rep.warnings) std::printf("warning: %s\n", w.c_str());
        if (have_emp) {
            std::printf("log a_emp    = %.12g (window %ld..%ld, fit spread %.3g)\n",
                        est.log_a_emp, est.n1, est.n2, est.residual_spread);
            std::printf("deviation    = %.3g\n", std::fabs(est.log_a_emp - rep.log_a_pred));
        }
    });
    return 0;
}

int run_certify(const std::string& spec_path, int S, int r, const std::string& alpha_text,
                long bits, const std::string& window, const OutputOpts& out) {
    require_bits(bits);
    if (S < 1) throw input_error("S must be at least 1");
    Rat alpha = rat_from_string(alpha_text);
    GFunctionSpec spec = load_spec(spec_path);
    CertifyConfig cfg;
    cfg.bits = bits;
    if (r >= 0) cfg.r = r;
    if (!window.empty()) parse_window(window, cfg.n1, cfg.n2);
    Certificate cert = certify(spec, alpha, S, cfg);
    Json doc = report_certificate(cert);
    emit(doc, out, [&] {
        std::printf("label: %s\n", cert.label.c_str());
        std::printf("S=%d r=%d alpha=%s window=%ld..%ld bits=%ld\n", cert.S, cert.r,
                    rat_to_string(cert.alpha).c_str(), cert.n1, cert.n2, cert.bits);
        std::printf("a0_emp = %.12g, b_emp = %.12g\n", cert.a0_emp, cert.b_emp);
        if (cert.has_bound)
            std::printf("dimension bound: %.6g (at least %ld independent values)\n", cert.bound,
                        cert.count);
        else
            std::printf("no bound certified for this window\n");
        for (const std::string& c : cert.caveats) std::printf("caveat: %s\n", c.c_str());
    });
    return 0;
}

int run_corpus_check(bool perturb, unsigned seed, const OutputOpts& out) {
    CorpusCheck check = corpus_check(perturb, seed);
    Json doc = report_corpus(check, perturb, seed);
    emit(doc, out, [&] {
        std::printf("examples: %d, checks: %d, failures: %zu\n", check.examples, check.checks,
                    check.failures.size());
        for (const std::string& f : check.failures) std::printf("FAIL %s\n", f.c_str());
    });
    return check.failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact structure, shifted-series decompositions, sequential linear forms\n"
        "and growth certificates for annihilators of G-functions"};
    app.require_subcommand(1);

    std::string spec_path, alpha_text = "1/2", window;
    long n = 10, bits = 128;
    int S = 1, r = -1, level = 1;
    bool perturb = false;
    unsigned seed = 0;
    OutputOpts out;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--out", out.out_path, "write the structured report to this path");
        cmd->add_flag("--json", out.json, "print the structured report instead of a summary");
    };
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "series spec file (or bare operator expression file)")
            ->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "theta form and exponent structure");
    add_spec(analyze);
    add_output(analyze);

    CLI::App* coeffs = app.add_subcommand("coeffs", "Taylor coefficients from the recurrence");
    add_spec(coeffs);
    coeffs->add_option("--n", n, "last coefficient index (default 10)");
    add_output(coeffs);

    CLI::App* decompose =
        app.add_subcommand("decompose", "reduce a shifted series to the basis representation");
    add_spec(decompose);
    decompose->add_option("--n", n, "shift index")->required();
    decompose->add_option("--S", level, "level s of the shifted series (default 1)");
    add_output(decompose);

    CLI::App* linform = app.add_subcommand("linform", "evaluate one sequential linear form");
    add_spec(linform);
    linform->add_option("--S", S, "number of shifted factors")->required();
    linform->add_option("--r", r, "derivative order parameter")->required();
    linform->add_option("--n", n, "index of the form")->required();
    linform->add_option("--alpha", alpha_text, "evaluation point 1/alpha, alpha rational");
    linform->add_option("--bits", bits, "working precision (default 128)");
    add_output(linform);

    CLI::App* asymp = app.add_subcommand("asymp", "saddle-point growth prediction");
    add_spec(asymp);
    asymp->add_option("--S", S, "number of shifted factors")->required();
    asymp->add_option("--r", r, "derivative order parameter")->required();
    asymp->add_option("--alpha", alpha_text, "evaluation point 1/alpha, alpha rational");
    asymp->add_option("--bits", bits, "working precision (default 128)");
    asymp->add_option("--window", window, "A:B — also measure the empirical rate over n in [A,B]");
    add_output(asymp);

    CLI::App* certify = app.add_subcommand("certify", "heuristic dimension-bound certificate");
    add_spec(certify);
    certify->add_option("--S", S, "number of shifted factors")->required();
    certify->add_option("--r", r, "derivative order parameter (default: S/log^2 S)");
    certify->add_option("--alpha", alpha_text, "evaluation point 1/alpha, alpha rational");
    certify->add_option("--bits", bits, "working precision (default 128; 256 is typical here)");
    certify->add_option("--window", window, "A:B fitting window for the growth rates");
    add_output(certify);

    CLI::App* corpus = app.add_subcommand("corpus-check", "golden structure and identity suite");
    corpus->add_flag("--perturb", perturb, "corrupt one pinned value (negative control)");
    corpus->add_option("--seed", seed, "selects the corrupted value under --perturb");
    add_output(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(spec_path, out);
        if (app.got_subcommand(coeffs)) return run_coeffs(spec_path, n, out);
        if (app.got_subcommand(decompose)) return run_decompose(spec_path, n, level, out);
        if (app.got_subcommand(linform))
            return run_linform(spec_path, S, r, n, alpha_text, bits, out);
        if (app.got_subcommand(asymp))
            return run_asymp(spec_path, S, r, alpha_text, bits, window, out);
        if (app.got_subcommand(certify))
            return run_certify(spec_path, S, r, alpha_text, bits, window, out);
        if (app.got_subcommand(corpus)) return run_corpus_check(perturb, seed, out);
    } catch (const input_error& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 1;
    } catch (const verify_error& e) {
        std::fprintf(stderr, "verification failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
