#include "gseed/linear_forms.hpp"

#include <algorithm>

#include "gseed/errors.hpp"

namespace gseed {

namespace {

/* truncated Taylor jets in eps: a[t] is the eps^t coefficient, length S */
using Jet = std::vector<Rat>;

/* multiply by (c + eps) in place */
void jet_mul_linear(Jet& a, const Rat& c) {
    for (size_t t = a.size(); t-- > 0;) {
        Rat v = a[t] * c;
        if (t > 0) v += a[t - 1];
        a[t] = v;
    }
}

Jet jet_mul(const Jet& a, const Jet& b) {
    Jet r(a.size(), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < a.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

Jet jet_inverse(const Jet& a) {
    if (a[0] == 0) throw verify_error("partial fractions: jet inversion at a zero constant term");
    Jet r(a.size(), Rat(0));
    r[0] = Rat(1) / a[0];
    for (size_t t = 1; t < a.size(); ++t) {
        Rat acc = 0;
        for (size_t v = 1; v <= t; ++v) acc += a[v] * r[t - v];
        r[t] = -acc / a[0];
    }
    return r;
}

Jet jet_pow(Jet base, unsigned e) {
    Jet r(base.size(), Rat(0));
    r[0] = 1;
    while (e) {
        if (e & 1) r = jet_mul(r, base);
        base = jet_mul(base, base);
        e >>= 1;
    }
    return r;
}

}  // namespace

PartialFractionTable partial_fractions(int S, int r, long n) {
    if (S < 1) throw input_error("partial fractions: need S >= 1");
    if (r < 0 || r > S) throw input_error("partial fractions: need 0 <= r <= S");
    if (n < 0) throw input_error("partial fractions: need n >= 0");

    PartialFractionTable t;
    t.S = S;
    t.r = r;
    t.n = n;
    t.c.assign((size_t)n + 1, std::vector<Rat>((size_t)S, Rat(0)));

    Rat scale(int_pow(factorial((unsigned long)n), (unsigned long)(S - r)));
    long rn = (long)r * n;

    for (long j = 1; j <= n + 1; ++j) {
        /* numerator jet: n!^(S-r) prod_{v=0}^{rn-1} (eps + v - rn + 1 - j) */
        Jet num((size_t)S, Rat(0));
        num[0] = scale;
        for (long v = 0; v < rn; ++v) jet_mul_linear(num, Rat(v - rn + 1 - j));

        /* denominator jet: prod_{i != j} (eps + i - j), then ^-S */
        Jet den((size_t)S, Rat(0));
        den[0] = 1;
        for (long i = 1; i <= n + 1; ++i)
            if (i != j) jet_mul_linear(den, Rat(i - j));
        Jet full = jet_mul(num, jet_pow(jet_inverse(den), (unsigned)S));

        /* c_{j,s} = eps^(S-s) coefficient */
        for (int s = 1; s <= S; ++s) t.c[(size_t)j - 1][(size_t)s - 1] = full[(size_t)(S - s)];
    }
    return t;
}

void partial_fraction_reconstruction_check(const PartialFractionTable& t) {
    long rn = (long)t.r * t.n;
    Rat scale(int_pow(factorial((unsigned long)t.n), (unsigned long)(t.S - t.r)));
    long samples = (long)t.S * (t.n + 1) + 1;
    for (long k = 0; k < samples; ++k) {
        Rat lhs = scale * pochhammer(Rat(k - rn + 1), (unsigned long)rn) /
                  rat_pow(pochhammer(Rat(k + 1), (unsigned long)(t.n + 1)), t.S);
        Rat rhs = 0;
        for (long j = 1; j <= t.n + 1; ++j)
            for (int s = 1; s <= t.S; ++s) {
                const Rat& c = t.c[(size_t)j - 1][(size_t)s - 1];
                if (c != 0) rhs += c / rat_pow(Rat(k + j), s);
            }
        if (lhs != rhs)
            throw verify_error("partial fractions: reconstruction mismatch at k = " +
                               std::to_string(k));
    }
}

CoefficientBoundReport coefficient_bound_check(const PartialFractionTable& t) {
    CoefficientBoundReport rep;
    long rn = (long)t.r * t.n;
    /* (rn+1) 2^S (r^r 2^(S+r+1))^n, with 0^0 = 1 */
    Int rr = t.r == 0 ? Int(1) : int_pow(Int(t.r), (unsigned long)t.r);
    Int base = rr * int_pow(Int(2), (unsigned long)(t.S + t.r + 1));
    Int bound = Int(rn + 1) * int_pow(Int(2), (unsigned long)t.S) *
                int_pow(base, (unsigned long)t.n);
    Int dnS = int_pow(lcm_upto(t.n), (unsigned long)t.S);

    for (const auto& row : t.c)
        for (const Rat& c : row) {
            if (rat_abs(c) > Rat(bound))
                throw verify_error("partial fractions: coefficient exceeds the size bound");
            double ratio = abs(BigFloat(c / Rat(bound), 96)).to_double();
            rep.max_ratio = std::max(rep.max_ratio, ratio);
            if (!mpz_divisible_p(dnS.get_mpz_t(), denominator(c).get_mpz_t())) {
                rep.integral = false;
                throw verify_error("partial fractions: d_n^S does not clear a denominator");
            }
        }
    return rep;
}

BigFloat t_series(CoefficientStream& A, int S, int r, long n, const Rat& z, long bits) {
    if (S < 0 || r < 0 || r > S) throw input_error("t_series: need 0 <= r <= S");
    if (n < 0) throw input_error("t_series: need n >= 0");
    if (z == 0) throw input_error("t_series: z must be nonzero");
    require_inside_radius(A.form().op, Rat(1) / z, "t_series");

    long wp = bits + 64;
    long rn = (long)r * n;

    /* G_k = n!^(S-r) (k-rn+1)_rn / (k+1)_(n+1)^S z^-k, carried as a float and
     * updated by its exact one-step ratio; the first rn terms vanish.
     */
    Rat g0 = Rat(int_pow(factorial((unsigned long)n), (unsigned long)(S - r))) *
             Rat(factorial((unsigned long)rn)) /
             rat_pow(pochhammer(Rat(rn + 1), (unsigned long)(n + 1)), S) /
             rat_pow(z, rn);
    BigFloat G(g0, wp);
    BigFloat zinv(Rat(1) / z, wp);

    BigFloat sum(wp), prev(wp);
    BigFloat eps = pow2(8 - bits, wp);
    long quiet = 0, checkpoint = 64, count = 0;
    const long k_limit = 1L << 24;
    for (long k = rn; k - rn < k_limit; ++k) {
        sum += G * BigFloat(A.at(k), wp);
        /* ratio to the next k */
        Rat ratio = (Rat(k + 1) / Rat(k + 1 - rn)) * rat_pow(Rat(k + 1) / Rat(k + n + 2), S);
        G = G * BigFloat(ratio, wp) * zinv;
        if (++count == checkpoint) {
            BigFloat diff = abs(sum - prev);
            BigFloat sc = max(BigFloat(1L, wp), abs(sum));
            quiet = (diff < eps * sc) ? quiet + 1 : 0;
            if (quiet >= 3) return sum;
            prev = sum;
            checkpoint *= 2;
        }
    }
    throw verify_error("t_series: no stabilization within 2^24 terms (z too close to 1/R?)");
}

SeriesValues series_values(CoefficientStream& A, long ell0, int S, int mu, const Rat& alpha,
                           long bits) {
    SeriesValues v;
    v.alpha = alpha;
    v.bits = bits;
    for (long u = 1; u <= ell0; ++u) {
        std::vector<BigFloat> row;
        for (int s = 1; s <= S; ++s) row.push_back(eval_shifted(A, u, s, alpha, bits));
        v.f.push_back(std::move(row));
    }
    for (int u = 0; u < mu; ++u) v.theta.push_back(eval_theta_derivative(A, u, alpha, bits));
    return v;
}

LinearFormRecord build_linear_form(DecompositionEngine& E, CoefficientStream& A, int S, int r,
                                   long n, const Rat& alpha, long bits,
                                   const SeriesValues* cached) {
    if (S < 1) throw input_error("linear form: need S >= 1");
    if (r < 0 || r > S) throw input_error("linear form: need 0 <= r <= S");
    long ell0 = E.ell0();
    if (n < ell0) throw input_error("linear form: need n >= ell0 = " + std::to_string(ell0));
    require_inside_radius(E.form().op, alpha, "linear form");

    const ThetaForm& tf = E.form();
    int mu = tf.mu, ell = tf.ell;
    long tilde_deg = n + 1 + (long)S * (ell - 1);

    LinearFormRecord rec;
    rec.S = S;
    rec.r = r;
    rec.n = n;
    rec.alpha = alpha;
    rec.bits = bits;

    PartialFractionTable table = partial_fractions(S, r, n);

    /* C[u][s](z) = c_{u,s} z^u + sum_{j>ell0} sum_{sigma>=s} c_{j,sigma} p_{u,s,sigma,j} z^j */
    rec.C.assign((size_t)ell0, std::vector<RationalPoly>((size_t)S, RationalPoly{}));
    for (long u = 1; u <= ell0; ++u)
        for (int s = 1; s <= S; ++s)
            rec.C[(size_t)u - 1][(size_t)s - 1] =
                RationalPoly::monomial(table.c[(size_t)u - 1][(size_t)s - 1], u);
    rec.C_tilde.assign((size_t)mu, RationalPoly{});

    for (long j = ell0 + 1; j <= n + 1; ++j)
        for (int sigma = 1; sigma <= S; ++sigma) {
            const Rat& cj = table.c[(size_t)j - 1][(size_t)sigma - 1];
            if (cj == 0) continue;
            const DecompositionRecord& d = E.record(j, sigma);
            for (long u = 1; u <= ell0; ++u)
                for (int s = 1; s <= sigma; ++s) {
                    const Rat& p = d.p[(size_t)u - 1][(size_t)s - 1];
                    if (p == 0) continue;
                    RationalPoly& C = rec.C[(size_t)u - 1][(size_t)s - 1];
                    C.set_coeff(j, C.coeff(j) + cj * p);
                }
            /* z^j q_{u,sigma,j}(1/z) z^(S(ell-1)) contributes at exponents
             * j + S(ell-1) - i >= (S-sigma)(ell-1) >= 0 */
            for (int u = 0; u < mu; ++u) {
                const RationalPoly& qp = d.q[(size_t)u];
                for (long i = 0; i <= qp.degree(); ++i) {
                    Rat c = qp.coeff(i);
                    if (c == 0) continue;
                    long e = j + (long)S * (ell - 1) - i;
                    if (e < 0)
                        throw verify_error("linear form: negative exponent in C_tilde assembly "
                                           "(decomposition degree bound violated)");
                    RationalPoly& Ct = rec.C_tilde[(size_t)u];
                    Ct.set_coeff(e, Ct.coeff(e) + cj * c);
                }
            }
        }

    for (const auto& row : rec.C)
        for (const RationalPoly& C : row)
            if (C.degree() > n + 1)
                throw verify_error("linear form: deg C exceeds n+1");
    for (const RationalPoly& Ct : rec.C_tilde)
        if (Ct.degree() > tilde_deg)
            throw verify_error("linear form: deg C_tilde exceeds n+1+S(ell-1)");

    /* exact evaluation at z = 1/alpha and the clearing constant */
    Rat zeval = Rat(1) / alpha;
    std::vector<std::vector<Rat>> Cv((size_t)ell0, std::vector<Rat>((size_t)S, Rat(0)));
    std::vector<Rat> Ctv((size_t)mu, Rat(0));
    Int delta(1);
    for (long u = 1; u <= ell0; ++u)
        for (int s = 1; s <= S; ++s) {
            Cv[(size_t)u - 1][(size_t)s - 1] = rec.C[(size_t)u - 1][(size_t)s - 1].eval(zeval);
            delta = int_lcm(delta, denominator(Cv[(size_t)u - 1][(size_t)s - 1]));
        }
    for (int u = 0; u < mu; ++u) {
        Ctv[(size_t)u] = rec.C_tilde[(size_t)u].eval(zeval);
        delta = int_lcm(delta, denominator(Ctv[(size_t)u]));
    }
    rec.Delta_n = delta;

    /* a-priori divisor: q0^(n+1+S(ell-1)) d_n^S D_emp */
    Int q0 = numerator(alpha);
    if (q0 < 0) q0 = -q0;
    rec.delta_divisor_bound = int_pow(q0, (unsigned long)tilde_deg) *
                              int_pow(lcm_upto(n), (unsigned long)S) *
                              E.cumulative_denominator(S, n + 1);
    if (!mpz_divisible_p(rec.delta_divisor_bound.get_mpz_t(), rec.Delta_n.get_mpz_t()))
        throw verify_error("linear form: Delta_n does not divide its a-priori shape "
                           "q0^(n+1+S(ell-1)) d_n^S D_emp");

    rec.p_int.assign((size_t)ell0, std::vector<Int>((size_t)S, Int(0)));
    rec.p_tilde_int.assign((size_t)mu, Int(0));
    for (long u = 1; u <= ell0; ++u)
        for (int s = 1; s <= S; ++s) {
            Rat scaled = Cv[(size_t)u - 1][(size_t)s - 1] * Rat(delta);
            if (denominator(scaled) != 1)
                throw verify_error("linear form: Delta_n failed to clear a coefficient");
            rec.p_int[(size_t)u - 1][(size_t)s - 1] = numerator(scaled);
        }
    for (int u = 0; u < mu; ++u) {
        Rat scaled = Ctv[(size_t)u] * Rat(delta);
        if (denominator(scaled) != 1)
            throw verify_error("linear form: Delta_n failed to clear a coefficient");
        rec.p_tilde_int[(size_t)u] = numerator(scaled);
    }

    /* numeric cross-check: the reduced form against the direct series */
    SeriesValues local;
    const SeriesValues* sv = cached;
    if (sv == nullptr || sv->alpha != alpha || sv->bits < bits) {
        local = series_values(A, ell0, S, mu, alpha, bits);
        sv = &local;
    }
    long wp = bits + 64;
    BigFloat value(wp);
    for (long u = 1; u <= ell0; ++u)
        for (int s = 1; s <= S; ++s)
            value += BigFloat(Cv[(size_t)u - 1][(size_t)s - 1], wp) *
                     sv->f[(size_t)u - 1][(size_t)s - 1];
    BigFloat apow(rat_pow(alpha, (long)S * (ell - 1)), wp);
    for (int u = 0; u < mu; ++u)
        value += BigFloat(Ctv[(size_t)u], wp) * apow * sv->theta[(size_t)u];
    rec.value = value;
    rec.direct = t_series(A, S, r, n, zeval, bits);
    rec.residual = abs(rec.value - rec.direct);
    rec.tau = BigFloat(rec.Delta_n, wp) * rec.value;
    return rec;
}

void pade_order_check(DecompositionEngine& E, CoefficientStream& A, const LinearFormRecord& rec) {
    const ThetaForm& tf = E.form();
    long rn = (long)rec.r * rec.n;
    long K_max = rn + 5;
    Rat scale(int_pow(factorial((unsigned long)rec.n), (unsigned long)(rec.S - rec.r)));
    long shift = (long)rec.S * (tf.ell - 1);

    for (long K = 0; K <= K_max; ++K) {
        /* direct Laurent coefficient of z^-K */
        Rat direct = scale * pochhammer(Rat(K - rn + 1), (unsigned long)rn) /
                     rat_pow(pochhammer(Rat(K + 1), (unsigned long)(rec.n + 1)), rec.S) * A.at(K);
        if (K < rn && direct != 0)
            throw verify_error("pade order: direct coefficient nonzero at k = " + std::to_string(K));

        /* reconstructed coefficient from C and C_tilde */
        Rat rebuilt = 0;
        for (size_t u = 1; u <= rec.C.size(); ++u)
            for (size_t s = 1; s <= rec.C[u - 1].size(); ++s) {
                const RationalPoly& C = rec.C[u - 1][s - 1];
                /* z^i * A_k z^-(k+u) / (k+u)^s lands on z^-K at k = K - u + i */
                for (long i = 0; i <= C.degree(); ++i) {
                    long k = K - (long)u + i;
                    if (k < 0 || C.coeff(i) == 0) continue;
                    rebuilt += C.coeff(i) * A.at(k) / rat_pow(Rat(K + i), (long)s);
                }
            }
        for (size_t u = 0; u < rec.C_tilde.size(); ++u) {
            const RationalPoly& Ct = rec.C_tilde[u];
            /* z^(i - shift) * k^u A_k z^-k lands on z^-K at k = K + i - shift */
            for (long i = 0; i <= Ct.degree(); ++i) {
                long k = K + i - shift;
                if (k < 0 || Ct.coeff(i) == 0) continue;
                rebuilt += Ct.coeff(i) * A.at(k) * rat_pow(Rat(k), (long)u);
            }
        }
        if (direct != rebuilt)
            throw verify_error("pade order: reconstruction differs from the series at k = " +
                               std::to_string(K));
        if (K < rn && rebuilt != 0)
            throw verify_error("pade order: rebuilt coefficient nonzero at k = " + std::to_string(K));
    }
}

}  // namespace gseed
