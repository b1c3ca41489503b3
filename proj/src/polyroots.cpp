#include "gseed/polyroots.hpp"

#include <algorithm>

#include "gseed/errors.hpp"

namespace gseed {

Int round_to_int(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_round(r.raw(), x.raw());
    Int out;
    mpfr_get_z(out.get_mpz_t(), r.raw(), MPFR_RNDN);
    return out;
}

static BigComplex horner(const std::vector<BigComplex>& c, const BigComplex& x) {
    BigComplex acc(x.prec());
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& c_in, mpfr_prec_t prec) {
    if (c_in.size() < 2) throw input_error("root finding needs degree >= 1");
    size_t d = c_in.size() - 1;

    /* monic copy at working precision */
    std::vector<BigComplex> c;
    c.reserve(c_in.size());
    for (const auto& ci : c_in) c.push_back(ci / c_in.back());

    /* Cauchy bound for the root radius */
    BigFloat radius(1L, prec);
    for (size_t i = 0; i < d; ++i) radius = max(radius, BigFloat(1L, prec) + abs(c[i]));

    /* spread the initial guesses on a circle, angle offset to dodge axes */
    std::vector<BigComplex> x;
    x.reserve(d);
    BigFloat two_pi = BigFloat(8L, prec) * atan2(BigFloat(1L, prec), BigFloat(1L, prec));
    for (size_t k = 0; k < d; ++k) {
        BigFloat ang = two_pi * BigFloat(Rat((long)(2 * k + 1), (long)(2 * d)), prec) + BigFloat(0.3, prec);
        BigFloat r = radius * BigFloat(0.7, prec);
        x.emplace_back(r * cos(ang), r * sin(ang));
    }

    BigFloat tol = pow2(-(long)prec + 24, prec);
    const int max_iter = 600 + (int)prec;
    for (int iter = 0; iter < max_iter; ++iter) {
        BigFloat worst(0L, prec);
        for (size_t i = 0; i < d; ++i) {
            BigComplex denom(BigFloat(1L, prec), BigFloat(0L, prec));
            for (size_t j = 0; j < d; ++j) {
                if (j == i) continue;
                denom *= (x[i] - x[j]);
            }
            if (denom.is_zero()) {
                /* collided guesses: nudge and retry next sweep */
                x[i] = x[i] + BigComplex(tol, tol);
                worst = max(worst, BigFloat(1L, prec));
                continue;
            }
            BigComplex step = horner(c, x[i]) / denom;
            x[i] = x[i] - step;
            BigFloat rel = abs(step) / max(BigFloat(1L, prec), abs(x[i]));
            worst = max(worst, rel);
        }
        if (worst < tol) return x;
    }
    throw verify_error("polynomial root iteration did not settle");
}

std::vector<BigComplex> complex_roots(const RationalPoly& p, mpfr_prec_t prec) {
    if (p.degree() < 1) throw input_error("root finding needs degree >= 1");
    std::vector<BigComplex> c;
    c.reserve((size_t)p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i), Rat(0), prec);
    return complex_roots(c, prec);
}

/* divisors of |v| by trial division; gives up (returning what it has,
 * always at least 1 and |v|) once the unfactored part exceeds the bound */
static std::vector<Int> divisors_of(Int v) {
    v = ::abs(v);
    std::vector<Int> divs{Int(1)};
    if (v <= 1) return divs;
    Int rest = v;
    std::vector<std::pair<Int, int>> fac;
    for (Int p(2); p * p <= rest && p < 1000000; ++p) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            fac.emplace_back(p, e);
        }
    }
    if (rest > 1) fac.emplace_back(rest, 1); /* may itself be composite if huge; candidates stay valid */
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk(1);
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

RationalRoots rational_roots(const RationalPoly& p) {
    RationalRoots out;
    if (p.is_zero()) {
        out.unfactored = p;
        return out;
    }
    RationalPoly q = p;
    int v = q.valuation();
    if (v > 0) {
        out.roots.emplace_back(Rat(0), v);
        std::vector<Rat> shifted(q.coeffs().begin() + v, q.coeffs().end());
        q = RationalPoly(std::move(shifted));
    }
    /* any rational root a/d (lowest terms) has d dividing the integer
     * leading coefficient; numeric roots supply the numerator guess */
    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            Rat root = -q.coeff(0) / q.coeff(1);
            bool merged = false;
            for (auto& [r, m] : out.roots)
                if (r == root) {
                    ++m;
                    merged = true;
                }
            if (!merged) out.roots.emplace_back(root, 1);
            q = RationalPoly(q.leading());
            break;
        }
        Int scale = q.denominator_lcm();
        RationalPoly qi = q * Rat(scale);
        std::vector<Int> denoms = divisors_of(numerator(qi.leading()));
        bool found = false;
        std::vector<BigComplex> approx = complex_roots(square_free_part(q), 192);
        BigFloat im_tol = pow2(-48, 192);
        for (const auto& z : approx) {
            if (!(abs(z.im()) < im_tol)) continue;
            for (const Int& d : denoms) {
                Int num = round_to_int(z.re() * BigFloat(d, 192));
                Rat cand(num, d);
                cand.canonicalize();
                if (q.eval(cand) != 0) continue;
                int mult = 0;
                while (!q.is_zero() && q.degree() >= 1 && q.eval(cand) == 0) {
                    q = q.deflate(cand);
                    ++mult;
                }
                out.roots.emplace_back(cand, mult);
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.unfactored = q;
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace gseed
