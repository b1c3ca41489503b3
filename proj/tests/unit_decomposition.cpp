#include "doctest.h"

#include "gseed/corpus.hpp"
#include "gseed/decomposition.hpp"

using namespace gseed;

TEST_CASE("geometric tails reduce with explicit polynomial parts") {
    ThetaForm tf = theta_form(polylog_spec().op);
    DecompositionEngine E(tf);
    REQUIRE(E.ell0() == 1);

    /* F_2^[1] = F_1^[1] - z, and -z = (z^2 - z) F for F = 1/(1-z) */
    const DecompositionRecord& r21 = E.record(2, 1);
    REQUIRE(r21.p.size() == 1);
    REQUIRE(r21.p[0].size() == 1);
    CHECK(r21.p[0][0] == Rat(1));
    REQUIRE(r21.q.size() == 1);
    CHECK(r21.q[0] == RationalPoly({Rat(0), Rat(-1), Rat(1)}));

    /* F_5^[3] = F_1^[3] - sum_{k=1}^4 z^k/k^3; multiplying the tail sum by
     * (z - 1) F recovers the polynomial part */
    const DecompositionRecord& r53 = E.record(5, 3);
    REQUIRE(r53.p.size() == 1);
    REQUIRE(r53.p[0].size() == 3);
    CHECK(r53.p[0][0] == Rat(0));
    CHECK(r53.p[0][1] == Rat(0));
    CHECK(r53.p[0][2] == Rat(1));
    RationalPoly tail({Rat(0), Rat(1), Rat(1, 8), Rat(1, 27), Rat(1, 64)});
    CHECK(r53.q[0] == RationalPoly({Rat(-1), Rat(1)}) * tail);
    CHECK(r53.q[0].degree() == 5); /* bound n + s(ell-1) = 5 */
}

TEST_CASE("trivial records below the family size") {
    ThetaForm tf = theta_form(polylog_spec().op);
    DecompositionEngine E(tf);
    const DecompositionRecord& r12 = E.record(1, 2);
    CHECK(r12.p[0][0] == Rat(0));
    CHECK(r12.p[0][1] == Rat(1));
    for (const RationalPoly& qu : r12.q) CHECK(qu.is_zero());
}

TEST_CASE("series residual vanishes identically across operators") {
    for (const GoldenExample& ex : golden_corpus()) {
        if (ex.label != "apery" && ex.label != "1/sqrt(1-6z+z^2)" && ex.label != "chi4-b2")
            continue;
        ThetaForm tf = theta_form(ex.spec.op);
        DecompositionEngine E(tf);
        CoefficientStream A(tf, ex.spec.initial);
        for (long n : {5L, 7L})
            for (int s : {1, 3}) {
                const DecompositionRecord& rec = E.record(n, s);
                std::vector<Rat> res = decomposition_residual(A, tf, rec, n + 25);
                for (const Rat& v : res) CHECK(v == 0);
            }
    }
}

TEST_CASE("polynomial degrees respect the stated bound") {
    GFunctionSpec spec = apery_spec(); /* ell = 2 makes the bound nontrivial */
    ThetaForm tf = theta_form(spec.op);
    DecompositionEngine E(tf);
    for (long n = 3; n <= 10; ++n)
        for (int s = 1; s <= 3; ++s) {
            const DecompositionRecord& rec = E.record(n, s);
            for (const RationalPoly& qu : rec.q)
                CHECK(qu.degree() <= n + (long)s * (tf.ell - 1));
        }
}

TEST_CASE("cumulative denominators are monotone under divisibility") {
    ThetaForm tf = theta_form(polylog_spec().op);
    DecompositionEngine E(tf);
    Int d15 = E.cumulative_denominator(1, 5);
    Int d18 = E.cumulative_denominator(1, 8);
    Int d28 = E.cumulative_denominator(2, 8);
    CHECK(mpz_divisible_p(d18.get_mpz_t(), d15.get_mpz_t()));
    CHECK(mpz_divisible_p(d28.get_mpz_t(), d18.get_mpz_t()));
    /* level-1 geometric tails carry the harmonic denominators */
    CHECK(d18 == Int(lcm_upto(7)));
}

TEST_CASE("growth profile tracks denominator and height rates") {
    ThetaForm tf = theta_form(polylog_spec().op);
    DecompositionEngine E(tf);
    GrowthProfile G = growth_profile(E, 1, 10);
    REQUIRE(G.denominator.size() == 10);
    CHECK(G.denominator[9] == Int(lcm_upto(9)));
    for (double r : G.den_rate) CHECK(r >= 1.0);
    for (double r : G.height_rate) CHECK(r > 0.0);
}
