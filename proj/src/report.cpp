#include "gseed/report.hpp"

#include <fstream>
#include <iostream>

#include "gseed/errors.hpp"

namespace gseed {

namespace {

constexpr int kFormatVersion = 1;

Json envelope(const std::string& kind) {
    Json doc;
    doc["tool"] = "gseed";
    doc["format_version"] = kFormatVersion;
    doc["kind"] = kind;
    return doc;
}

Json json_root_list(const RationalRoots& rr) {
    Json arr = Json::array();
    for (const auto& [root, mult] : rr.roots) {
        Json e;
        e["root"] = json_rational(root);
        e["multiplicity"] = mult;
        arr.push_back(e);
    }
    return arr;
}

}  // namespace

Json json_rational(const Rat& v) { return rat_to_string(v); }

Json json_integer(const Int& v) { return v.get_str(); }

Json json_bigfloat(const BigFloat& v) {
    Json e;
    e["value"] = v.to_string();
    e["bits"] = v.prec();
    return e;
}

Json json_complex(const BigComplex& v) {
    Json e;
    e["re"] = v.re().to_string();
    e["im"] = v.im().to_string();
    e["bits"] = v.prec();
    return e;
}

Json json_poly(const RationalPoly& p) {
    Json arr = Json::array();
    for (long i = 0; i <= p.degree(); ++i) arr.push_back(json_rational(p.coeff(i)));
    return arr;
}

Json report_structure(const std::string& label, const StructureSummary& s) {
    Json doc = envelope("structure");
    doc["label"] = label;
    doc["mu"] = s.form.mu;
    doc["omega"] = s.form.omega;
    doc["delta"] = s.form.delta;
    doc["ell"] = s.form.ell;
    doc["clearing_constant"] = json_rational(s.form.clearing_constant);
    Json q = Json::array();
    for (const RationalPoly& qj : s.form.q) q.push_back(json_poly(qj));
    doc["q"] = q;
    Json exps;
    exps["at_zero"] = json_root_list(s.exponents.at_zero);
    exps["at_infinity"] = json_root_list(s.exponents.at_infinity);
    Json iz = Json::array(), ii = Json::array();
    for (const Int& e : s.exponents.integer_at_zero) iz.push_back(json_integer(e));
    for (const Int& e : s.exponents.integer_at_infinity) ii.push_back(json_integer(e));
    exps["integer_at_zero"] = iz;
    exps["integer_at_infinity"] = ii;
    exps["fully_factored"] = s.exponents.fully_factored;
    doc["exponents"] = exps;
    doc["ell0"] = s.exponents.ell0;
    doc["m_min"] = s.exponents.m_min;
    return doc;
}

Json report_coefficients(const std::string& label, CoefficientStream& A, long n) {
    Json doc = envelope("coefficients");
    doc["label"] = label;
    doc["count"] = n + 1;
    doc["resonance_bound"] = A.resonance_bound();
    Json arr = Json::array();
    for (long k = 0; k <= n; ++k) arr.push_back(json_rational(A.at(k)));
    doc["coefficients"] = arr;
    return doc;
}

Json report_decomposition(const std::string& label, const DecompositionRecord& rec,
                          const std::vector<Rat>& residual) {
    Json doc = envelope("decomposition");
    doc["label"] = label;
    doc["n"] = rec.n;
    doc["s"] = rec.s;
    Json p = Json::array();
    for (const auto& row : rec.p) {
        Json r = Json::array();
        for (const Rat& v : row) r.push_back(json_rational(v));
        p.push_back(r);
    }
    doc["p"] = p;
    Json q = Json::array();
    for (const RationalPoly& qu : rec.q) q.push_back(json_poly(qu));
    doc["q"] = q;
    bool exact = true;
    for (const Rat& v : residual)
        if (v != 0) exact = false;
    doc["residual_terms_checked"] = residual.size();
    doc["residual_identically_zero"] = exact;
    return doc;
}

Json report_linear_form(const std::string& label, const LinearFormRecord& rec) {
    Json doc = envelope("linear_form");
    doc["label"] = label;
    doc["S"] = rec.S;
    doc["r"] = rec.r;
    doc["n"] = rec.n;
    doc["alpha"] = json_rational(rec.alpha);
    doc["bits"] = rec.bits;
    Json C = Json::array();
    for (const auto& row : rec.C) {
        Json r = Json::array();
        for (const RationalPoly& c : row) r.push_back(json_poly(c));
        C.push_back(r);
    }
    doc["C"] = C;
    Json Ct = Json::array();
    for (const RationalPoly& c : rec.C_tilde) Ct.push_back(json_poly(c));
    doc["C_tilde"] = Ct;
    doc["Delta_n"] = json_integer(rec.Delta_n);
    doc["Delta_n_divisor_bound"] = json_integer(rec.delta_divisor_bound);
    Json p = Json::array();
    for (const auto& row : rec.p_int) {
        Json r = Json::array();
        for (const Int& v : row) r.push_back(json_integer(v));
        p.push_back(r);
    }
    doc["p_int"] = p;
    Json pt = Json::array();
    for (const Int& v : rec.p_tilde_int) pt.push_back(json_integer(v));
    doc["p_tilde_int"] = pt;
    doc["value"] = json_bigfloat(rec.value);
    doc["direct"] = json_bigfloat(rec.direct);
    doc["residual"] = json_bigfloat(rec.residual);
    doc["tau"] = json_bigfloat(rec.tau);
    return doc;
}

Json report_saddle(const std::string& label, const SaddleReport& rep) {
    Json doc = envelope("saddle");
    doc["label"] = label;
    doc["S"] = rep.S;
    doc["r"] = rep.r;
    doc["alpha"] = json_rational(rep.alpha);
    doc["bits"] = rep.bits;
    Json rates = Json::array();
    for (const SingularityRate& sr : rep.rates) {
        Json e;
        e["xi"] = json_complex(sr.xi);
        e["z"] = json_complex(sr.z);
        e["tau"] = json_complex(sr.saddle.tau);
        e["phi_exp"] = json_complex(sr.saddle.phi_exp);
        e["psi"] = json_complex(sr.saddle.psi);
        e["rho"] = json_bigfloat(sr.saddle.rho);
        rates.push_back(e);
    }
    doc["singularities"] = rates;
    Json dom = Json::array();
    for (size_t i : rep.dominant) dom.push_back(i);
    doc["dominant"] = dom;
    doc["a_pred"] = json_bigfloat(rep.a_pred);
    doc["log_a_pred"] = rep.log_a_pred;
    doc["within_crude_bound"] = rep.within_crude_bound;
    doc["warnings"] = rep.warnings;
    return doc;
}

Json report_empirical(const GrowthEstimate& est) {
    Json e;
    e["n1"] = est.n1;
    e["n2"] = est.n2;
    e["bits"] = est.bits;
    e["log_a_emp"] = est.log_a_emp;
    e["intercept"] = est.intercept;
    e["kappa"] = est.kappa;
    e["lambda"] = est.lambda;
    e["residual_spread"] = est.residual_spread;
    e["samples"] = est.samples;
    return e;
}

Json report_certificate(const Certificate& cert) {
    Json doc = envelope("certificate");
    doc["label"] = cert.label;
    doc["alpha"] = json_rational(cert.alpha);
    doc["S"] = cert.S;
    doc["r"] = cert.r;
    doc["window"] = Json::array({cert.n1, cert.n2});
    doc["bits"] = cert.bits;
    doc["degree"] = cert.degree;
    doc["a0_emp"] = cert.a0_emp;
    doc["b_emp"] = cert.b_emp;
    doc["log_a0_emp"] = cert.log_a0_emp;
    doc["log_b_emp"] = cert.log_b_emp;
    doc["fit_spread_a0"] = cert.fit_spread_a0;
    doc["fit_spread_b"] = cert.fit_spread_b;
    doc["has_bound"] = cert.has_bound;
    if (cert.has_bound) {
        doc["bound"] = cert.bound;
        doc["count"] = cert.count;
    }
    doc["tau_log"] = cert.tau_log;
    doc["coeff_log"] = cert.coeff_log;
    doc["caveats"] = cert.caveats;
    return doc;
}

Json report_corpus(const CorpusCheck& check, bool perturb, unsigned seed) {
    Json doc = envelope("corpus");
    doc["perturbed"] = perturb;
    if (perturb) doc["seed"] = seed;
    doc["examples"] = check.examples;
    doc["checks"] = check.checks;
    doc["failures"] = check.failures;
    doc["passed"] = check.failures.empty();
    return doc;
}

void write_report(const Json& doc, const std::string& path) {
    std::string text = doc.dump(2);
    text += '\n';
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output path: " + path);
    out << text;
    if (!out) throw input_error("failed writing report to: " + path);
}

}  // namespace gseed
