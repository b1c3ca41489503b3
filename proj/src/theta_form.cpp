#include "gseed/theta_form.hpp"

#include <algorithm>
#include <map>

#include "gseed/errors.hpp"

namespace gseed {

/* Collect L = sum_k P_k(z) D^k as a Laurent sum sum_a z^a R_a(T) using
 * z^k D^k = T(T-1)...(T-k+1): the monomial p z^i D^k contributes
 * p z^(i-k) [T]_k. The normal form then reads off the support [a_min, a_max]:
 * with mu the order, omega = mu + a_min, delta = mu + a_max, and
 * q[j](X) = alpha R_(a_min+j)(X - j) after clearing denominators.
 */
ThetaForm theta_form(const DiffOperator& L) {
    if (L.is_zero() || L.order() < 1)
        throw input_error("theta form: operator must be nonzero of order >= 1");

    int mu = L.order();

    /* falling factorials [T]_k for k = 0..mu */
    std::vector<RationalPoly> ff(1, RationalPoly::monomial(Rat(1), 0));
    for (int k = 1; k <= mu; ++k)
        ff.push_back(ff.back() * RationalPoly::linear(Rat(1 - k)));

    std::map<long, RationalPoly> raw;
    for (int k = 0; k <= mu; ++k) {
        const RationalPoly& pk = L.P[(size_t)k];
        for (long i = 0; i <= pk.degree(); ++i) {
            Rat c = pk.coeff(i);
            if (c == 0) continue;
            raw[i - k] += ff[(size_t)k] * c;
        }
    }
    for (auto it = raw.begin(); it != raw.end();)
        it = it->second.is_zero() ? raw.erase(it) : std::next(it);
    if (raw.empty()) throw input_error("theta form: operator collapsed to zero");

    long a_min = raw.begin()->first;
    long a_max = raw.rbegin()->first;

    /* Regularity at 0 and infinity is exactly the statement that the extreme
     * theta polynomials reach the full degree mu.
     */
    if (raw[a_min].degree() != mu)
        throw input_error("theta form: 0 is an irregular singularity (lowest theta "
                          "polynomial has degree " + std::to_string(raw[a_min].degree()) +
                          " < " + std::to_string(mu) + ")");
    if (raw[a_max].degree() != mu)
        throw input_error("theta form: infinity is an irregular singularity (highest theta "
                          "polynomial has degree " + std::to_string(raw[a_max].degree()) +
                          " < " + std::to_string(mu) + ")");

    ThetaForm tf;
    tf.mu = mu;
    tf.omega = (int)(mu + a_min);
    tf.delta = (int)(mu + a_max);
    tf.ell = tf.delta - tf.omega;
    tf.op = L;
    if (tf.ell == 0)
        throw input_error("theta form: delta = omega (a single theta block); the shifted-series "
                          "machinery needs ell >= 1");

    Int alpha = 1;
    for (const auto& [a, R] : raw) alpha = int_lcm(alpha, R.denominator_lcm());
    tf.clearing_constant = alpha;

    tf.q.assign((size_t)tf.ell + 1, RationalPoly{});
    for (const auto& [a, R] : raw) {
        long j = a - a_min;
        RationalPoly qj = R * Rat(alpha);
        tf.q[(size_t)j] = qj.shift(Rat(-j));
    }
    return tf;
}

RationalPoly monomial_action(const ThetaForm& tf, long p) {
    if (p < 0) throw input_error("monomial_action: exponent must be >= 0");
    RationalPoly out;
    Rat inv_alpha = Rat(1) / Rat(tf.clearing_constant);
    for (long j = 0; j <= tf.ell; ++j) {
        Rat v = tf.q[(size_t)j].eval(Rat(p + j));
        if (v == 0) continue;
        long e = p + j + tf.omega - tf.mu;
        if (e < 0)
            throw verify_error("monomial_action: negative exponent with nonzero coefficient "
                               "(theta form is inconsistent)");
        out.set_coeff(e, out.coeff(e) + v * inv_alpha);
    }
    return out;
}

ExponentReport exponent_report(const ThetaForm& tf) {
    ExponentReport rep;
    rep.at_zero = rational_roots(tf.q[0]);
    /* exponents at infinity are the roots x of q[ell](-x + ell) */
    RationalPoly at_inf = tf.q[(size_t)tf.ell].reflect().shift(Rat(-tf.ell));
    rep.at_infinity = rational_roots(at_inf);

    auto integer_part = [](const RationalRoots& rr, std::vector<Int>& out) {
        for (const auto& [root, mult] : rr.roots)
            if (denominator(root) == 1)
                for (int i = 0; i < mult; ++i) out.push_back(numerator(root));
        std::sort(out.begin(), out.end());
    };
    integer_part(rep.at_zero, rep.integer_at_zero);
    integer_part(rep.at_infinity, rep.integer_at_infinity);

    rep.fully_factored =
        rep.at_zero.unfactored.degree() < 1 && rep.at_infinity.unfactored.degree() < 1;

    rep.ell0 = tf.ell;
    if (!rep.integer_at_infinity.empty()) {
        const Int& top = rep.integer_at_infinity.back();
        if (top > rep.ell0) {
            if (!top.fits_slong_p())
                throw input_error("exponent report: integer exponent at infinity too large");
            rep.ell0 = top.get_si();
        }
    }
    rep.m_min = rep.ell0 - tf.ell + 1;
    return rep;
}

StructureSummary analyze_operator(const DiffOperator& L) {
    StructureSummary s;
    s.form = theta_form(L);
    s.exponents = exponent_report(s.form);
    return s;
}

}  // namespace gseed
