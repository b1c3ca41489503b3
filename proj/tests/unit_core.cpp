#include "doctest.h"

#include "gseed/diff_operator.hpp"
#include "gseed/errors.hpp"
#include "gseed/theta_form.hpp"

using namespace gseed;

TEST_CASE("polynomial division and gcd") {
    RationalPoly a({Rat(-1), Rat(0), Rat(1)});            /* z^2 - 1 */
    RationalPoly b({Rat(-1), Rat(1)});                    /* z - 1 */
    auto [q, r] = poly_divmod(a, b);
    CHECK(q == RationalPoly({Rat(1), Rat(1)}));
    CHECK(r.is_zero());
    RationalPoly g = poly_gcd(a, RationalPoly({Rat(1), Rat(-2), Rat(1)})); /* (z-1)^2 */
    CHECK(g.degree() == 1);
    CHECK(g.eval(Rat(1)) == 0);
}

TEST_CASE("rational roots with multiplicity") {
    /* (z - 1)^2 (2z + 3) */
    RationalPoly p = RationalPoly({Rat(-1), Rat(1)}) * RationalPoly({Rat(-1), Rat(1)}) *
                     RationalPoly({Rat(3), Rat(2)});
    RationalRoots rr = rational_roots(p);
    REQUIRE(rr.roots.size() == 2);
    bool saw_one = false, saw_mhalf = false;
    for (const auto& [root, mult] : rr.roots) {
        if (root == Rat(1)) {
            saw_one = true;
            CHECK(mult == 2);
        }
        if (root == Rat(-3, 2)) {
            saw_mhalf = true;
            CHECK(mult == 1);
        }
    }
    CHECK(saw_one);
    CHECK(saw_mhalf);
    CHECK(rr.unfactored.degree() == 0);
}

TEST_CASE("operator parsing and composition") {
    /* T = z D as a composition identity */
    DiffOperator t = parse_operator("T");
    DiffOperator zd = parse_operator("z*D");
    CHECK(t == zd);

    /* (D + 1)(D - 1) = D^2 - 1, constant coefficients commute */
    DiffOperator lhs = parse_operator("(D + 1)*(D - 1)");
    DiffOperator rhs = parse_operator("D^2 - 1");
    CHECK(lhs == rhs);

    /* D z = z D + 1 (Leibniz), so D*z - z*D - 1 must vanish... but the
     * parser rejects zero results, so compare the two sides instead */
    CHECK(parse_operator("D*z") == parse_operator("z*D + 1"));
}

TEST_CASE("operator application to polynomials") {
    DiffOperator L = parse_operator("(1 - z)*D - 1");
    /* L z^k = k z^(k-1) - (k+1) z^k */
    RationalPoly img = apply_operator(L, RationalPoly::monomial(Rat(1), 3));
    CHECK(img == RationalPoly({Rat(0), Rat(0), Rat(3), Rat(-4)}));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS((void)parse_operator("(1 - z)*D - "), input_error);
    CHECK_THROWS_AS((void)parse_operator("D / z"), input_error);       /* nonconstant divisor */
    CHECK_THROWS_AS((void)parse_operator("D^(1/2)"), input_error);     /* fractional power */
    CHECK_THROWS_AS((void)parse_operator("z - z"), input_error);       /* zero operator */
    CHECK_THROWS_AS((void)parse_operator("z + 1"), input_error);       /* order zero */
}

TEST_CASE("theta form of the geometric-series operator") {
    ThetaForm tf = theta_form(parse_operator("(1 - z)*D - 1"));
    CHECK(tf.mu == 1);
    CHECK(tf.omega == 0);
    CHECK(tf.delta == 1);
    CHECK(tf.ell == 1);
    REQUIRE(tf.q.size() == 2);
    /* q0 = X, q1 = -X (after the shift X -> X+1 of -(X+1)) */
    CHECK(tf.q[0] == RationalPoly({Rat(0), Rat(1)}));
    CHECK(tf.q[1] == RationalPoly({Rat(0), Rat(-1)}));
}

TEST_CASE("theta form reproduces the operator through monomial action") {
    /* both routes must give the same image of z^p for several p */
    for (const char* text :
         {"(z^2 - 6*z + 1)*D + (z - 3)", "(z - 1)^2*D^3 + 3*(z - 1)*D^2 + D",
          "z^2*(1 - 34*z + z^2)*D^3 + z*(3 - 153*z + 6*z^2)*D^2 + (1 - 112*z + 7*z^2)*D + (z - 5)"}) {
        DiffOperator L = parse_operator(text);
        ThetaForm tf = theta_form(L);
        for (long p = 0; p <= 6; ++p) {
            RationalPoly direct = apply_operator(L, RationalPoly::monomial(Rat(1), p));
            CHECK(monomial_action(tf, p) == direct);
        }
    }
}

TEST_CASE("exponent report on the threefold log operator") {
    StructureSummary s = analyze_operator(parse_operator("(z - 1)^2*D^3 + 3*(z - 1)*D^2 + D"));
    CHECK(s.form.ell == 2);
    CHECK(s.exponents.ell0 == 2);
    CHECK(s.exponents.m_min == 1);
    REQUIRE(s.exponents.at_zero.roots.size() == 3); /* 0, 1, 2 simple */
    REQUIRE(s.exponents.at_infinity.roots.size() == 1);
    CHECK(s.exponents.at_infinity.roots[0].first == Rat(0));
    CHECK(s.exponents.at_infinity.roots[0].second == 3);
    CHECK(s.exponents.fully_factored);
}

TEST_CASE("hypergeometric operator validation") {
    CHECK_THROWS_AS((void)hypergeometric_operator({Rat(1)}, {Rat(0)}), input_error);
    CHECK_THROWS_AS((void)hypergeometric_operator({Rat(1)}, {Rat(-2)}), input_error);
    DiffOperator L = hypergeometric_operator({Rat(1), Rat(1)}, {Rat(2)});
    CHECK(L.order() == 2);
}
