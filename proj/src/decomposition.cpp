#include "gseed/decomposition.hpp"

#include <cmath>
#include <mutex>

#include "gseed/bigfloat.hpp"
#include "gseed/errors.hpp"

namespace gseed {

DecompositionEngine::DecompositionEngine(const ThetaForm& tf)
    : tf_(tf), rep_(exponent_report(tf)) {}

const InhomogeneousData& DecompositionEngine::table(int s) {
    auto it = tables_.find(s);
    if (it == tables_.end()) it = tables_.emplace(s, shift_tables(tf_, s)).first;
    return it->second;
}

const DecompositionRecord& DecompositionEngine::record(long n, int s) {
    if (n < 1 || s < 1) throw input_error("decomposition: need n >= 1 and s >= 1");
    {
        std::shared_lock lock(mtx_);
        auto it = memo_.find({n, s});
        if (it != memo_.end()) return it->second;
    }
    std::unique_lock lock(mtx_);
    return fill(n, s);
}

/* caller holds the unique lock */
const DecompositionRecord& DecompositionEngine::fill(long n, int s) {
    auto it = memo_.find({n, s});
    if (it != memo_.end()) return it->second;

    /* bottom-up so the working set never recurses: level t at index k only
     * needs levels <= t at indices <= k */
    for (int t = 1; t <= s; ++t) {
        for (long k = 1; k <= n; ++k) {
            if (memo_.count({k, t})) continue;

            DecompositionRecord rec;
            rec.n = k;
            rec.s = t;
            rec.p.assign((size_t)rep_.ell0, std::vector<Rat>((size_t)t, Rat(0)));
            rec.q.assign((size_t)tf_.mu, RationalPoly{});

            if (k <= rep_.ell0) {
                rec.p[(size_t)k - 1][(size_t)t - 1] = 1;
                memo_.emplace(std::make_pair(k, t), std::move(rec));
                continue;
            }

            long nu = k - tf_.ell; /* >= m_min, so Q_ell(-nu) != 0 */
            Rat ql = tf_.q[(size_t)tf_.ell].eval(Rat(-nu));
            if (ql == 0)
                throw verify_error("decomposition: Q_ell(-nu) = 0 at nu = " + std::to_string(nu) +
                                   " despite nu >= m_min; exponent report is inconsistent");
            Rat inv = Rat(1) / ql;

            const InhomogeneousData& T = table(t);
            auto add_scaled = [&](const DecompositionRecord& src, const Rat& c) {
                for (size_t a = 0; a < src.p.size(); ++a)
                    for (size_t bb = 0; bb < src.p[a].size(); ++bb)
                        if (src.p[a][bb] != 0) rec.p[a][bb] += c * src.p[a][bb];
                for (size_t u = 0; u < src.q.size(); ++u)
                    if (!src.q[u].is_zero()) rec.q[u] += src.q[u] * c;
            };

            /* lower-level terms: beta_{j,nu,tt,t} F_{nu+j}^[tt] */
            for (int j = 0; j <= tf_.ell; ++j)
                for (int tt = 1; tt <= t - 1; ++tt) {
                    Rat bv = beta_value(T, j, tt, nu);
                    if (bv == 0) continue;
                    add_scaled(memo_.at({nu + j, tt}), bv * inv);
                }
            /* polynomial terms: z^(nu+j) B_j(nu; theta) F */
            for (int j = 0; j <= tf_.ell; ++j) {
                RationalPoly B = b_polynomial(T, j, nu);
                for (long u = 0; u <= B.degree(); ++u) {
                    Rat c = B.coeff(u);
                    if (c == 0) continue;
                    if (u >= tf_.mu)
                        throw verify_error("decomposition: theta power beyond mu - 1 in the shift "
                                           "identity tables");
                    rec.q[(size_t)u] += RationalPoly::monomial(c * inv, nu + j);
                }
            }
            /* same-level terms pushed down: -Q_j(-nu) F_{nu+j}^[t], j < ell */
            for (int j = 0; j < tf_.ell; ++j) {
                Rat c = tf_.q[(size_t)j].eval(Rat(-nu));
                if (c == 0) continue;
                add_scaled(memo_.at({nu + j, t}), -c * inv);
            }

            for (const RationalPoly& qu : rec.q)
                if (qu.degree() > k + (long)t * (tf_.ell - 1))
                    throw verify_error("decomposition: polynomial part exceeds its degree bound");

            memo_.emplace(std::make_pair(k, t), std::move(rec));
        }
    }
    return memo_.at({n, s});
}

Int DecompositionEngine::cumulative_denominator(int s, long n) {
    if (n < 1 || s < 1) throw input_error("decomposition: need n >= 1 and s >= 1");
    record(n, s); /* make sure everything below (s, n) exists */
    std::unique_lock lock(mtx_);
    Int running(1);
    long start = 1;
    for (long k = n; k >= 1; --k) {
        auto it = den_cache_.find({s, k});
        if (it != den_cache_.end()) {
            running = it->second;
            start = k + 1;
            break;
        }
    }
    for (long k = start; k <= n; ++k) {
        for (int t = 1; t <= s; ++t) {
            const DecompositionRecord& rec = memo_.at({k, t});
            for (const auto& row : rec.p)
                for (const Rat& v : row)
                    if (v != 0) running = int_lcm(running, denominator(v));
            for (const RationalPoly& qu : rec.q)
                for (long i = 0; i <= qu.degree(); ++i)
                    if (qu.coeff(i) != 0) running = int_lcm(running, denominator(qu.coeff(i)));
        }
        den_cache_[{s, k}] = running;
    }
    return den_cache_.at({s, n});
}

std::vector<Rat> decomposition_residual(CoefficientStream& A, const ThetaForm& tf,
                                        const DecompositionRecord& rec, long N) {
    std::vector<Rat> out((size_t)N, Rat(0));
    /* F_n^[s] truncated */
    for (long k = 0; k + rec.n < N; ++k)
        out[(size_t)(k + rec.n)] += A.at(k) / rat_pow(Rat(k + rec.n), rec.s);
    /* minus the p-part */
    for (size_t j = 1; j <= rec.p.size(); ++j)
        for (size_t t = 1; t <= rec.p[j - 1].size(); ++t) {
            const Rat& c = rec.p[j - 1][t - 1];
            if (c == 0) continue;
            for (long k = 0; k + (long)j < N; ++k)
                out[(size_t)(k + (long)j)] -= c * A.at(k) / rat_pow(Rat(k + (long)j), (long)t);
        }
    /* minus the polynomial part: q[u](z) theta^u F */
    for (size_t u = 0; u < rec.q.size(); ++u) {
        const RationalPoly& qu = rec.q[u];
        if (qu.is_zero()) continue;
        for (long i = 0; i <= qu.degree(); ++i) {
            Rat c = qu.coeff(i);
            if (c == 0) continue;
            for (long k = 0; k + i < N; ++k)
                out[(size_t)(k + i)] -= c * A.at(k) * rat_pow(Rat(k), (long)u);
        }
    }
    return out;
}

GrowthProfile growth_profile(DecompositionEngine& E, int s, long n_max) {
    if (s < 1 || n_max < 1) throw input_error("growth profile: need s >= 1 and n_max >= 1");
    GrowthProfile G;
    G.s = s;
    Int running(1);
    double h_log = 0.0; /* log of max |entry|, entries start at the trivial 1 */
    auto log_abs = [](const Rat& v) {
        return log(abs(BigFloat(v, 128))).to_double();
    };
    for (long n = 1; n <= n_max; ++n) {
        for (int t = 1; t <= s; ++t) {
            const DecompositionRecord& rec = E.record(n, t);
            for (const auto& row : rec.p)
                for (const Rat& v : row)
                    if (v != 0) {
                        running = int_lcm(running, denominator(v));
                        h_log = std::max(h_log, log_abs(v));
                    }
            for (const RationalPoly& qu : rec.q)
                for (long i = 0; i <= qu.degree(); ++i) {
                    Rat c = qu.coeff(i);
                    if (c != 0) {
                        running = int_lcm(running, denominator(c));
                        h_log = std::max(h_log, log_abs(c));
                    }
                }
        }
        G.denominator.push_back(running);
        double dlog = log(BigFloat(running, 128)).to_double();
        G.den_rate.push_back(std::exp(dlog / (double)n));
        G.height_log.push_back(h_log);
        G.height_rate.push_back(std::exp(h_log / (double)n));
    }
    return G;
}

}  // namespace gseed
