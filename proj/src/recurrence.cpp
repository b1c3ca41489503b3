#include "gseed/recurrence.hpp"

#include <algorithm>

#include "gseed/errors.hpp"
#include "gseed/polyroots.hpp"

namespace gseed {

namespace {

/* (X + j)^e as a polynomial in X */
RationalPoly shifted_power(long j, long e) {
    RationalPoly r = RationalPoly::monomial(Rat(1), 0);
    RationalPoly base = RationalPoly::linear(Rat(j));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

void check_degree(const RationalPoly& p, long bound, const char* what) {
    /* the zero polynomial clears every bound, including negative ones (they
     * arise when some interior Q_j vanishes and force the entry to be zero) */
    if (p.is_zero()) return;
    if (p.degree() > bound)
        throw verify_error(std::string("shift tables: ") + what + " exceeds its degree bound");
}

}  // namespace

InhomogeneousData shift_tables(const ThetaForm& tf, int s) {
    if (s < 1) throw input_error("shift tables: level must be >= 1");

    int ell = tf.ell;
    std::vector<long> d(ell + 1);
    for (int j = 0; j <= ell; ++j) d[j] = tf.q[(size_t)j].degree();

    /* level 1: integrate x^(n-1) (sum_j z^j Q_j(theta+j)) F by parts.
     * b[j][q](n) = sum_{m>q} rho_{j,m} sum_{p=q+1}^m C(m,p) j^(m-p) (-1)^(p-q) (n+j)^(p-q-1)
     * with rho_{j,m} the X^m coefficient of Q_j.
     */
    InhomogeneousData T;
    T.s = 1;
    T.ell = ell;
    T.beta.assign((size_t)ell + 1, {});
    T.b.assign((size_t)ell + 1, {});
    for (int j = 0; j <= ell; ++j) {
        long dj = d[j];
        if (dj < 1) continue;
        T.b[(size_t)j].assign((size_t)dj, RationalPoly{});
        for (long q = 0; q < dj; ++q) {
            RationalPoly acc;
            for (long m = q + 1; m <= dj; ++m) {
                Rat rho = tf.q[(size_t)j].coeff(m);
                if (rho == 0) continue;
                for (long p = q + 1; p <= m; ++p) {
                    Rat c = rho * Rat(binomial((unsigned long)m, (unsigned long)p)) *
                            rat_pow(Rat(j), m - p) * ((p - q) % 2 ? Rat(-1) : Rat(1));
                    if (c == 0) continue;
                    acc += shifted_power(j, p - q - 1) * c;
                }
            }
            T.b[(size_t)j][(size_t)q] = acc;
            check_degree(acc, dj - q - 1, "b");
        }
    }

    /* integrate once per additional level */
    for (int level = 1; level < s; ++level) {
        InhomogeneousData N;
        N.s = level + 1;
        N.ell = ell;
        N.beta.assign((size_t)ell + 1, {});
        N.b.assign((size_t)ell + 1, {});
        for (int j = 0; j <= ell; ++j) {
            long width = (long)T.b[(size_t)j].size();  /* = max(d_j - level + 1, 0) slots */
            /* new beta, t = 1: sum_q (-1)^q (n+j)^q b[j][q](n) */
            N.beta[(size_t)j].assign((size_t)N.s - 1, RationalPoly{});
            RationalPoly t1;
            for (long q = 0; q < width; ++q) {
                if (T.b[(size_t)j][(size_t)q].is_zero()) continue;
                RationalPoly term = shifted_power(j, q) * T.b[(size_t)j][(size_t)q];
                if (q % 2) term *= Rat(-1);
                t1 += term;
            }
            N.beta[(size_t)j][0] = t1;
            check_degree(t1, d[j] + 1 - N.s, "beta");
            /* shift the old betas: new t = old t - 1 */
            for (int t = 2; t <= level; ++t)
                N.beta[(size_t)j][(size_t)t - 1] = T.beta[(size_t)j][(size_t)t - 2];

            /* new b[j][h] = sum_{q>h} (-1)^(q-h-1) (n+j)^(q-h-1) b[j][q] */
            long nw = std::max<long>(width - 1, 0);
            N.b[(size_t)j].assign((size_t)nw, RationalPoly{});
            for (long h = 0; h < nw; ++h) {
                RationalPoly acc;
                for (long q = h + 1; q < width; ++q) {
                    if (T.b[(size_t)j][(size_t)q].is_zero()) continue;
                    RationalPoly term = shifted_power(j, q - h - 1) * T.b[(size_t)j][(size_t)q];
                    if ((q - h - 1) % 2) term *= Rat(-1);
                    acc += term;
                }
                N.b[(size_t)j][(size_t)h] = acc;
                check_degree(acc, d[j] - h - N.s, "b");
            }
        }
        T = std::move(N);
    }
    return T;
}

Rat beta_value(const InhomogeneousData& T, int j, int t, long n) {
    if (j < 0 || j > T.ell || t < 1 || t > T.s - 1) return Rat(0);
    const auto& row = T.beta[(size_t)j];
    if ((size_t)(t - 1) >= row.size()) return Rat(0);
    return row[(size_t)t - 1].eval(Rat(n));
}

RationalPoly b_polynomial(const InhomogeneousData& T, int j, long n) {
    RationalPoly B;
    if (j < 0 || j > T.ell) return B;
    const auto& row = T.b[(size_t)j];
    for (size_t q = 0; q < row.size(); ++q) B.set_coeff((long)q, row[q].eval(Rat(n)));
    return B;
}

std::vector<Rat> recurrence_residual(CoefficientStream& A, const ThetaForm& tf,
                                     const InhomogeneousData& T, long n, long N) {
    if (n < 1) throw input_error("recurrence residual: n must be >= 1");
    std::vector<Rat> out((size_t)N, Rat(0));
    int ell = tf.ell;
    for (long K = 1; K < N; ++K) {
        Rat lhs = 0, rhs = 0;
        for (int j = 0; j <= ell; ++j) {
            long k = K - n - j;
            if (k < 0) continue;
            const Rat& Ak = A.at(k);
            if (Ak == 0) continue;
            /* LHS: Q_j(-n) A_k / K^s */
            lhs += tf.q[(size_t)j].eval(Rat(-n)) * Ak / rat_pow(Rat(K), T.s);
            /* beta terms */
            for (int t = 1; t <= T.s - 1; ++t) {
                Rat bv = beta_value(T, j, t, n);
                if (bv != 0) rhs += bv * Ak / rat_pow(Rat(K), t);
            }
            /* z^(n+j) B_j(n; theta) F contributes B_j(n; k) A_k at z^K */
            rhs += b_polynomial(T, j, n).eval(Rat(k)) * Ak;
        }
        out[(size_t)K] = lhs - rhs;
    }
    return out;
}

/* ------------------------------------------------------------------ */

HomogeneousBasis::HomogeneousBasis(const ThetaForm& tf, long m) : tf_(tf), m_(m) {
    if (m < 1) throw input_error("homogeneous basis: start index must be >= 1");
    for (int i = 0; i < tf_.ell; ++i) {
        std::vector<Rat> row((size_t)tf_.ell, Rat(0));
        row[(size_t)i] = 1;
        vals_.push_back(std::move(row));
    }
}

void HomogeneousBasis::extend(long n) {
    while ((long)vals_.size() <= n - m_) {
        long next = m_ + (long)vals_.size();    /* computing U(next) */
        long base = next - tf_.ell;             /* recurrence centered at n = base */
        Rat ql = tf_.q[(size_t)tf_.ell].eval(Rat(-base));
        if (ql == 0)
            throw input_error("homogeneous basis: leading recurrence coefficient vanishes at n = " +
                              std::to_string(base) + "; start the basis at a larger index");
        std::vector<Rat> row((size_t)tf_.ell, Rat(0));
        for (int col = 0; col < tf_.ell; ++col) {
            Rat acc = 0;
            for (int j = 0; j < tf_.ell; ++j)
                acc += tf_.q[(size_t)j].eval(Rat(-base)) * vals_[(size_t)(base + j - m_)][(size_t)col];
            row[(size_t)col] = -acc / ql;
        }
        vals_.push_back(std::move(row));
    }
}

Rat HomogeneousBasis::u(int j, long n) {
    if (j < 1 || j > tf_.ell) throw input_error("homogeneous basis: column out of range");
    if (n < m_) throw input_error("homogeneous basis: index below start");
    extend(n);
    return vals_[(size_t)(n - m_)][(size_t)j - 1];
}

namespace {

Rat det_rational(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace

Rat HomogeneousBasis::wronskian(long n) {
    int ell = tf_.ell;
    std::vector<std::vector<Rat>> mat;
    for (int i = 0; i < ell; ++i) {
        std::vector<Rat> row;
        for (int j = 1; j <= ell; ++j) row.push_back(u(j, n + ell - 1 - i));
        mat.push_back(std::move(row));
    }
    return det_rational(std::move(mat));
}

Rat HomogeneousBasis::minor_d(int j, long n) {
    int ell = tf_.ell;
    if (j < 1 || j > ell) throw input_error("homogeneous basis: column out of range");
    std::vector<std::vector<Rat>> mat;
    for (int i = 0; i < ell - 1; ++i) {
        std::vector<Rat> row;
        for (int h = 1; h <= ell; ++h) {
            if (h == j) continue;
            row.push_back(u(h, n + ell - 2 - i));
        }
        mat.push_back(std::move(row));
    }
    Rat det = det_rational(std::move(mat));
    return (j % 2 == 0) ? Rat(-det) : det;
}

Rat casoratian_step(const ThetaForm& tf, long n) {
    Rat ql = tf.q[(size_t)tf.ell].eval(Rat(-n));
    if (ql == 0) throw input_error("casoratian step: Q_ell(-n) = 0 at n = " + std::to_string(n));
    Rat r = tf.q[0].eval(Rat(-n)) / ql;
    return (tf.ell % 2) ? Rat(-r) : r;
}

std::optional<Rat> casoratian_ratio_closed(const ThetaForm& tf, long m, long n) {
    if (n < m) throw input_error("casoratian ratio: need n >= m");
    RationalRoots at0 = rational_roots(tf.q[0]);
    RationalPoly qinf = tf.q[(size_t)tf.ell].reflect().shift(Rat(-tf.ell));
    RationalRoots atinf = rational_roots(qinf);
    if (at0.unfactored.degree() >= 1 || atinf.unfactored.degree() >= 1) return std::nullopt;

    Rat c = tf.q[0].leading() / tf.q[(size_t)tf.ell].leading();
    if (tf.ell % 2) c = -c;
    Rat r = rat_pow(c, n - m);
    for (const auto& [e, mult] : at0.roots)
        for (int i = 0; i < mult; ++i) r *= pochhammer(Rat(m) + e, (unsigned long)(n - m));
    for (const auto& [f, mult] : atinf.roots)
        for (int i = 0; i < mult; ++i) {
            Rat denom = pochhammer(Rat(m + tf.ell) - f, (unsigned long)(n - m));
            if (denom == 0)
                throw input_error("casoratian ratio: pochhammer factor vanishes (start index below "
                                  "an integer exponent at infinity)");
            r /= denom;
        }
    return r;
}

Rat general_solution_value(HomogeneousBasis& U, const ThetaForm& tf, const std::vector<Rat>& chi,
                           const std::function<Rat(long)>& g, long n) {
    int ell = tf.ell;
    if ((int)chi.size() != ell) throw input_error("general solution: need ell mixing coefficients");
    Rat v = 0;
    for (int j = 1; j <= ell; ++j) {
        Rat coeff = chi[(size_t)j - 1];
        for (long k = U.start() + 1; k <= n; ++k) {
            Rat w = U.wronskian(k);
            if (w == 0) throw verify_error("general solution: vanishing casoratian");
            Rat ql = tf.q[(size_t)tf.ell].eval(Rat(1 - k));
            if (ql == 0) throw input_error("general solution: Q_ell(1-k) = 0 inside the window");
            coeff += U.minor_d(j, k) * g(k - 1) / (ql * w);
        }
        v += coeff * U.u(j, n);
    }
    return v;
}

}  // namespace gseed
