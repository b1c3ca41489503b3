#include "doctest.h"

#include "gseed/corpus.hpp"
#include "gseed/errors.hpp"
#include "gseed/series.hpp"

using namespace gseed;

namespace {

double dabs(const BigFloat& x) { return abs(x).to_double(); }

}  // namespace

TEST_CASE("geometric series coefficients are all one") {
    GFunctionSpec spec = polylog_spec();
    CoefficientStream A(theta_form(spec.op), spec.initial);
    for (long k = 0; k <= 40; ++k) CHECK(A.at(k) == 1);
}

TEST_CASE("initial data is validated against the recurrence") {
    GFunctionSpec spec = polylog_spec();
    /* A_0 = 1 forces A_1 = 1; claiming A_1 = 2 must be rejected */
    DiffOperator op2 = spec.op; /* same operator, two supplied values */
    CHECK_THROWS_AS(CoefficientStream(theta_form(op2), std::vector<Rat>{Rat(1), Rat(2)}),
                    input_error);
    /* resonant operator: needs values through the largest integer root of q0 */
    GFunctionSpec lg = spec_from_text(
        "{\"operator\": \"(z - 1)^2*D^3 + 3*(z - 1)*D^2 + D\", \"initial\": [\"0\"]}");
    CHECK_THROWS_AS(CoefficientStream(theta_form(lg.op), lg.initial), input_error);
}

TEST_CASE("spec files parse both operator expressions and coefficient lists") {
    GFunctionSpec a = spec_from_text("{\"operator\": \"(1 - z)*D - 1\", \"initial\": [\"1\"]}");
    GFunctionSpec b = spec_from_text(
        "{\"P\": [[\"-1\"], [\"1\", \"-1\"]], \"initial\": [\"1\"], \"label\": \"geometric\"}");
    CHECK(a.op == b.op);
    CHECK(b.label == "geometric");
    CHECK_THROWS_AS((void)spec_from_text("{\"initial\": [\"1\"]}"), input_error);
    CHECK_THROWS_AS((void)spec_from_text("{ not json"), input_error);
}

TEST_CASE("radius lower bound") {
    GFunctionSpec spec = polylog_spec();
    RadiusInfo info = radius_lower_bound(spec.op, 128);
    CHECK(!info.entire);
    REQUIRE(info.rational_singularities.size() == 1);
    CHECK(info.rational_singularities[0] == Rat(1));
    CHECK(dabs(info.lower - BigFloat(1L, 128)) < 1e-30);

    /* 1 - 34 z + z^2 has roots (sqrt(2) -+ 1)^4: nearest ~ 0.0294 */
    RadiusInfo ap = radius_lower_bound(apery_spec().op, 128);
    double r = ap.lower.to_double();
    CHECK(r > 0.0294);
    CHECK(r < 0.0295);
}

TEST_CASE("shifted series evaluations against closed forms") {
    GFunctionSpec spec = polylog_spec();
    CoefficientStream A(theta_form(spec.op), spec.initial);
    long bits = 256;
    Rat half(1, 2);

    /* F_1^[1](1/2) = sum_{m>=1} (1/2)^m / m = log 2 */
    BigFloat f11 = eval_shifted(A, 1, 1, half, bits);
    BigFloat lg2(0L, bits);
    mpfr_const_log2(lg2.raw(), MPFR_RNDN);
    CHECK(dabs(f11 - lg2) < 1e-60);

    /* F_2^[2](1/2) = Li_2(1/2) - 1/2 = pi^2/12 - log(2)^2/2 - 1/2 */
    BigFloat f22 = eval_shifted(A, 2, 2, half, bits);
    BigFloat pi(0L, bits);
    mpfr_const_pi(pi.raw(), MPFR_RNDN);
    BigFloat expect = pi * pi / BigFloat(12L, bits) - lg2 * lg2 / BigFloat(2L, bits) -
                      BigFloat(Rat(1, 2), bits);
    CHECK(dabs(f22 - expect) < 1e-60);

    /* theta F = z/(1-z)^2 at 1/2 evaluates to 2 */
    BigFloat th1 = eval_theta_derivative(A, 1, half, bits);
    CHECK(dabs(th1 - BigFloat(2L, bits)) < 1e-60);
    /* theta^0 F = F = 2 at z = 1/2 */
    BigFloat th0 = eval_theta_derivative(A, 0, half, bits);
    CHECK(dabs(th0 - BigFloat(2L, bits)) < 1e-60);
}

TEST_CASE("evaluation outside the certified disc is refused") {
    GFunctionSpec spec = polylog_spec();
    CoefficientStream A(theta_form(spec.op), spec.initial);
    CHECK_THROWS_AS((void)eval_shifted(A, 1, 1, Rat(3, 2), 128), input_error);
}

TEST_CASE("coefficient stream is copyable with independent caches") {
    GFunctionSpec spec = apery_spec();
    CoefficientStream a(theta_form(spec.op), spec.initial);
    (void)a.at(5);
    CoefficientStream b = a;
    CHECK(b.at(20) == a.at(20));
    CHECK(b.known() >= 21);
}
