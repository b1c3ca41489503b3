#pragma once

#include <string>
#include <vector>

#include "gseed/bigfloat.hpp"
#include "gseed/theta_form.hpp"

namespace gseed {

/* A power series F = sum A_k z^k pinned down by an annihilating operator
 * and enough initial coefficients to start the recurrence.
 */
struct GFunctionSpec {
    DiffOperator op;
    std::vector<Rat> initial;
    std::string label;
};

/* Accepts either a JSON document ({"operator": "...", "initial": [...],
 * "label": "..."}, or "P" in place of "operator" for a coefficient list)
 * or, if the text does not start with '{', a bare operator expression.
 */
GFunctionSpec spec_from_text(const std::string& text);
GFunctionSpec load_spec(const std::string& path);

/* Exact Taylor coefficients driven by sum_j q[j](k) A_{k-j} = 0 (k >= 0,
 * A_j = 0 for j < 0), which is the coefficient-level form of LF = 0.
 * Indices k with q[0](k) = 0 do not determine A_k, so initial data must
 * cover 0..k0 where k0 is the largest nonnegative integer root of q[0];
 * every supplied coefficient is checked against the recurrence.
 */
class CoefficientStream {
  public:
    CoefficientStream(const ThetaForm& tf, std::vector<Rat> initial);

    const Rat& at(long k);
    void prefetch(long k);
    long known() const { return (long)a_.size(); }
    long resonance_bound() const { return k0_; }
    const ThetaForm& form() const { return tf_; }

  private:
    ThetaForm tf_;
    std::vector<Rat> a_;
    long k0_ = -1;
};

/* Distance from 0 to the nearest nonzero root of the leading coefficient,
 * rounded down: a certified lower bound for the radius of convergence of
 * any solution of L that is holomorphic at 0.
 */
struct RadiusInfo {
    BigFloat lower;
    std::vector<Rat> rational_singularities;  // exact nonzero rational roots of P_mu
    long numeric_count = 0;                   // nonzero roots only known numerically
    bool entire = false;                      // no nonzero root: series converges everywhere
};

RadiusInfo radius_lower_bound(const DiffOperator& op, long bits);

/* throws input_error unless alpha != 0 and |alpha| is strictly inside the
 * certified convergence disc of op's holomorphic solutions */
void require_inside_radius(const DiffOperator& op, const Rat& alpha, const char* what);

/* F_n^[s](alpha) = sum_k A_k alpha^(k+n) / (k+n)^s.  Partial sums are
 * checkpointed at doubling truncation lengths and accepted once three
 * consecutive checkpoints agree to 2^(8-bits) relative; |alpha| must be
 * strictly inside the disc certified by radius_lower_bound.
 */
BigFloat eval_shifted(CoefficientStream& A, long n, long s, const Rat& alpha, long bits);

/* (theta^j F)(alpha) = sum_k k^j A_k alpha^k, same stabilization. */
BigFloat eval_theta_derivative(CoefficientStream& A, int j, const Rat& alpha, long bits);

}  // namespace gseed
