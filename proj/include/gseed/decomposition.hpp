#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "gseed/recurrence.hpp"

namespace gseed {

/* F_n^[s] = sum_{t=1}^s sum_{j=1}^{ell0} p[j-1][t-1] F_j^[t]
 *         + sum_{u=0}^{mu-1} q[u](z) theta^u F,
 * with deg q[u] <= n + s(ell-1).
 */
struct DecompositionRecord {
    long n = 0;
    int s = 0;
    std::vector<std::vector<Rat>> p;
    std::vector<RationalPoly> q;
};

/* Reduces F_n^[s] for n > ell0 by solving the shift identity at nu = n - ell
 * for its top term: every right-hand side entry has smaller level or smaller
 * index, so downward substitution terminates at the trivial records n <= ell0.
 * Q_ell(-nu) != 0 is guaranteed because nu >= m_min clears all integer
 * exponents at infinity. Records are memoized; concurrent readers share the
 * cache once it is filled.
 */
class DecompositionEngine {
  public:
    explicit DecompositionEngine(const ThetaForm& tf);

    const DecompositionRecord& record(long n, int s);

    /* lcm of the denominators of every record entry with level <= s and
     * index <= n; cached incrementally, monotone in both arguments */
    Int cumulative_denominator(int s, long n);

    long ell0() const { return rep_.ell0; }
    int mu() const { return tf_.mu; }
    const ThetaForm& form() const { return tf_; }
    const ExponentReport& exponents() const { return rep_; }

  private:
    ThetaForm tf_;
    ExponentReport rep_;
    std::map<int, InhomogeneousData> tables_;
    std::map<std::pair<long, int>, DecompositionRecord> memo_;
    std::map<std::pair<int, long>, Int> den_cache_;
    std::shared_mutex mtx_;

    const InhomogeneousData& table(int s);
    const DecompositionRecord& fill(long n, int s);
};

/* Exact coefficients of z^0..z^(N-1) of F_n^[s] minus its decomposition;
 * identically zero iff the record is correct through that order.
 */
std::vector<Rat> decomposition_residual(CoefficientStream& A, const ThetaForm& tf,
                                        const DecompositionRecord& rec, long N);

/* Cumulative denominator and height growth of the records with t <= s,
 * n' <= n; entry i belongs to n = i + 1.
 */
struct GrowthProfile {
    int s = 1;
    std::vector<Int> denominator;     /* lcm of all record denominators */
    std::vector<double> den_rate;     /* denominator^(1/n) */
    std::vector<double> height_log;   /* log of the largest |entry| */
    std::vector<double> height_rate;  /* exp(height_log / n) */
};

GrowthProfile growth_profile(DecompositionEngine& E, int s, long n_max);

}  // namespace gseed
