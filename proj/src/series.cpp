#include "gseed/series.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "gseed/errors.hpp"
#include "gseed/polyroots.hpp"

namespace gseed {

namespace {

std::vector<Rat> rationals_from_json(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<Rat> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (v.is_string())
            out.push_back(rat_from_string(v.get<std::string>()));
        else if (v.is_number_integer())
            out.push_back(Rat(v.get<long>()));
        else
            throw input_error(std::string(what) +
                              ": entries must be integers or rational strings like \"3/4\"");
    }
    return out;
}

}  // namespace

GFunctionSpec spec_from_text(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw input_error("series spec: empty document");

    GFunctionSpec spec;
    if (text[i] != '{') {
        spec.op = parse_operator(text);
        return spec;
    }

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("series spec: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw input_error("series spec: top level must be an object");

    if (doc.contains("operator")) {
        if (!doc["operator"].is_string())
            throw input_error("series spec: \"operator\" must be an expression string");
        spec.op = parse_operator(doc["operator"].get<std::string>());
    } else if (doc.contains("P")) {
        if (!doc["P"].is_array()) throw input_error("series spec: \"P\" must be a list of coefficient lists");
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : doc["P"]) {
            if (!row.is_array()) throw input_error("series spec: each entry of \"P\" must be a list");
            std::vector<std::string> r;
            for (const auto& c : row) {
                if (c.is_string())
                    r.push_back(c.get<std::string>());
                else if (c.is_number_integer())
                    r.push_back(std::to_string(c.get<long>()));
                else
                    throw input_error("series spec: \"P\" entries must be integers or rational strings");
            }
            rows.push_back(std::move(r));
        }
        spec.op = operator_from_coefficients(rows);
    } else {
        throw input_error("series spec: need \"operator\" (expression) or \"P\" (coefficient lists)");
    }

    if (doc.contains("initial")) spec.initial = rationals_from_json(doc["initial"], "series spec: \"initial\"");
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw input_error("series spec: \"label\" must be a string");
        spec.label = doc["label"].get<std::string>();
    }
    return spec;
}

GFunctionSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return spec_from_text(ss.str());
}

/* ------------------------------------------------------------------ */

CoefficientStream::CoefficientStream(const ThetaForm& tf, std::vector<Rat> initial)
    : tf_(tf), a_(std::move(initial)) {
    RationalRoots r0 = rational_roots(tf_.q[0]);
    for (const auto& [root, mult] : r0.roots) {
        if (denominator(root) == 1 && root >= 0) {
            Int n = numerator(root);
            if (!n.fits_slong_p()) throw input_error("coefficient stream: resonance index too large");
            k0_ = std::max(k0_, n.get_si());
        }
    }
    if ((long)a_.size() < k0_ + 1)
        throw input_error("coefficient stream: the recurrence leaves A_0..A_" +
                          std::to_string(k0_) + " free; " + std::to_string(k0_ + 1) +
                          " initial coefficients are required, got " + std::to_string(a_.size()));
    if (a_.empty())
        throw input_error("coefficient stream: at least one initial coefficient is required");

    bool all_zero = true;
    for (const Rat& v : a_) all_zero = all_zero && v == 0;
    if (all_zero) throw input_error("coefficient stream: all initial coefficients are zero "
                                    "(the series is identically zero)");

    /* every supplied index must satisfy sum_j q[j](k) A_{k-j} = 0 */
    for (long k = 0; k < (long)a_.size(); ++k) {
        Rat r = 0;
        for (long j = 0; j <= std::min<long>(tf_.ell, k); ++j)
            r += tf_.q[(size_t)j].eval(Rat(k)) * a_[(size_t)(k - j)];
        if (r != 0) {
            bool resonant = tf_.q[0].eval(Rat(k)) == 0;
            throw input_error("coefficient stream: initial coefficients violate the recurrence "
                              "at index " + std::to_string(k) +
                              (resonant ? " (a resonant index: the constraint there is forced)"
                                        : " (this coefficient is determined by earlier ones)"));
        }
    }
}

void CoefficientStream::prefetch(long k) {
    while ((long)a_.size() <= k) {
        long m = (long)a_.size();
        Rat q0m = tf_.q[0].eval(Rat(m));
        if (q0m == 0)
            throw verify_error("coefficient stream: vanishing leading recurrence value past the "
                               "supplied initial segment (index " + std::to_string(m) + ")");
        Rat v = 0;
        for (long j = 1; j <= std::min<long>(tf_.ell, m); ++j)
            v -= tf_.q[(size_t)j].eval(Rat(m)) * a_[(size_t)(m - j)];
        a_.push_back(v / q0m);
    }
}

const Rat& CoefficientStream::at(long k) {
    if (k < 0) throw input_error("coefficient stream: negative index");
    prefetch(k);
    return a_[(size_t)k];
}

/* ------------------------------------------------------------------ */

RadiusInfo radius_lower_bound(const DiffOperator& op, long bits) {
    RadiusInfo info{BigFloat(0L, bits), {}, 0, false};
    RationalPoly p = op.leading();
    long v = p.valuation();
    if (v > 0) {
        RationalPoly q;
        for (long i = v; i <= p.degree(); ++i) q.set_coeff(i - v, p.coeff(i));
        p = q;
    }
    if (p.degree() < 1) {
        info.entire = true;
        return info;
    }

    RationalRoots rr = rational_roots(p);
    bool first = true;
    auto take = [&](const BigFloat& m) {
        if (first || m < info.lower) info.lower = m;
        first = false;
    };
    for (const auto& [root, mult] : rr.roots) {
        info.rational_singularities.push_back(root);
        take(abs(BigFloat(root, bits)));
    }
    if (rr.unfactored.degree() >= 1) {
        /* extra working precision, and a shaved modulus, so that rounding in
         * the root finder can only make the bound smaller */
        auto roots = complex_roots(rr.unfactored, 2 * bits + 32);
        info.numeric_count = (long)roots.size();
        BigFloat shave = BigFloat(1L, bits) - pow2(-40, bits);
        for (const auto& z : roots) take(abs(z) * shave);
    }
    return info;
}

namespace {

BigFloat stabilized_sum(const std::function<BigFloat(long)>& term, long bits, const char* what) {
    long wp = bits + 64;
    BigFloat sum(wp);
    BigFloat prev(wp);
    BigFloat eps = pow2(8 - bits, wp);
    long quiet = 0;
    long checkpoint = 64;
    const long k_max = 1L << 24;
    for (long k = 0; k < k_max; ++k) {
        sum += term(k);
        if (k + 1 == checkpoint) {
            BigFloat diff = abs(sum - prev);
            BigFloat scale = max(BigFloat(1L, wp), abs(sum));
            quiet = (diff < eps * scale) ? quiet + 1 : 0;
            if (quiet >= 3) return sum;
            prev = sum;
            checkpoint *= 2;
        }
    }
    throw verify_error(std::string(what) + ": series did not stabilize within 2^24 terms "
                       "(argument too close to the boundary?)");
}

}  // namespace

void require_inside_radius(const DiffOperator& op, const Rat& alpha, const char* what) {
    if (alpha == 0) throw input_error(std::string(what) + ": argument must be nonzero");
    RadiusInfo R = radius_lower_bound(op, 192);
    if (R.entire) return;
    if (!(abs(BigFloat(alpha, 192)) < R.lower))
        throw input_error(std::string(what) + ": |argument| = " +
                          abs(BigFloat(alpha, 64)).to_string(6) +
                          " is not inside the certified convergence disc of radius " +
                          R.lower.to_string(6));
}

BigFloat eval_shifted(CoefficientStream& A, long n, long s, const Rat& alpha, long bits) {
    if (n < 1) throw input_error("eval_shifted: shift index must be >= 1");
    if (s < 0) throw input_error("eval_shifted: power must be >= 0");
    require_inside_radius(A.form().op, alpha, "eval_shifted");

    long wp = bits + 64;
    BigFloat a(alpha, wp);
    BigFloat p = pow_si(a, n);  /* alpha^(k+n), updated incrementally */
    return stabilized_sum(
        [&](long k) {
            BigFloat t = BigFloat(A.at(k), wp) * p;
            if (s > 0) t = t / BigFloat(int_pow(Int(k + n), (unsigned long)s), wp);
            p = p * a;
            return t;
        },
        bits, "eval_shifted");
}

BigFloat eval_theta_derivative(CoefficientStream& A, int j, const Rat& alpha, long bits) {
    if (j < 0) throw input_error("eval_theta_derivative: order must be >= 0");
    require_inside_radius(A.form().op, alpha, "eval_theta_derivative");

    long wp = bits + 64;
    BigFloat a(alpha, wp);
    BigFloat p(1L, wp);  /* alpha^k */
    return stabilized_sum(
        [&](long k) {
            BigFloat t = BigFloat(A.at(k), wp) * p;
            if (j > 0) t = t * BigFloat(int_pow(Int(k), (unsigned long)j), wp);
            p = p * a;
            return t;
        },
        bits, "eval_theta_derivative");
}

}  // namespace gseed
