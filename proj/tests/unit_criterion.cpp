#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "gseed/corpus.hpp"
#include "gseed/criterion.hpp"
#include "gseed/errors.hpp"
#include "gseed/report.hpp"

using namespace gseed;

using cplx = std::complex<double>;

TEST_CASE("shift selection, two alternating terms") {
    std::vector<cplx> c = {cplx(1, 0), cplx(1, 0)};
    std::vector<cplx> zeta = {cplx(1, 0), cplx(-1, 0)};
    /* sum = 1 + (-1)^(n+delta): picks the shift of matching parity */
    ShiftSelection even = shift_select(c, zeta, 10);
    CHECK(even.delta == 0);
    CHECK(even.attained == doctest::Approx(2.0));
    ShiftSelection odd = shift_select(c, zeta, 11);
    CHECK(odd.delta == 1);
    CHECK(odd.attained == doctest::Approx(2.0));
    /* threshold = |c_1 Delta_0| / T! with Delta_0 = zeta_2 - zeta_1 */
    CHECK(even.threshold == doctest::Approx(1.0));
    CHECK(even.attained >= even.threshold * (1 - 1e-12));
}

TEST_CASE("shift selection satisfies the pigeonhole bound on random data") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> mag(0.2, 1.0), ang(0.0, 6.283185307179586);
    for (int trial = 0; trial < 60; ++trial) {
        int T = 2 + (int)(rng() % 3);
        std::vector<cplx> c, zeta;
        for (int t = 0; t < T; ++t) {
            c.push_back(std::polar(mag(rng), ang(rng)));
            zeta.push_back(std::polar(1.0, ang(rng)));
        }
        /* keep the zeta's well separated so Delta_0 is not spuriously tiny */
        bool separated = true;
        for (int i = 0; i < T; ++i)
            for (int j = i + 1; j < T; ++j)
                if (std::abs(zeta[i] - zeta[j]) < 0.1) separated = false;
        if (!separated) continue;
        long n = (long)(rng() % 5000);
        ShiftSelection sel = shift_select(c, zeta, n);
        CHECK(sel.delta >= 0);
        CHECK(sel.delta < T);
        CHECK(sel.attained >= sel.threshold * (1 - 1e-9));
    }
}

TEST_CASE("shift selection input validation") {
    std::vector<cplx> c = {cplx(1, 0)};
    std::vector<cplx> zeta = {cplx(1, 0), cplx(-1, 0)};
    CHECK_THROWS_AS((void)shift_select(c, zeta, 3), input_error);
    CHECK_THROWS_AS((void)shift_select({}, {}, 3), input_error);
    std::vector<cplx> repeated = {cplx(1, 0), cplx(1, 0)};
    std::vector<cplx> c2 = {cplx(1, 0), cplx(2, 0)};
    CHECK_THROWS_AS((void)shift_select(c2, repeated, 3), input_error);
}

TEST_CASE("dimension bound, commensurable cases are exact") {
    DimensionBound two = dimension_bound(Rat(1, 4), Rat(4), 1);
    CHECK(two.exact);
    CHECK(two.exact_value == Rat(2));
    CHECK(two.count == 2);
    CHECK(two.value == doctest::Approx(2.0));

    DimensionBound scaled = dimension_bound(Rat(1, 8), Rat(2), 2);
    CHECK(scaled.exact);
    CHECK(scaled.exact_value == Rat(2));
    CHECK(scaled.count == 2);
}

TEST_CASE("dimension bound, non-commensurable case") {
    DimensionBound d = dimension_bound(Rat(1, 3), Rat(2), 1);
    CHECK(!d.exact);
    /* 1 + log 3 / log 2 */
    CHECK(d.value == doctest::Approx(1.0 + std::log(3.0) / std::log(2.0)).epsilon(1e-12));
    CHECK(d.count == 3);
}

TEST_CASE("dimension bound rejects out-of-range rates") {
    CHECK_THROWS_AS((void)dimension_bound(Rat(2), Rat(4), 1), input_error);
    CHECK_THROWS_AS((void)dimension_bound(Rat(1, 2), Rat(1, 2), 1), input_error);
    CHECK_THROWS_AS((void)dimension_bound(Rat(0), Rat(4), 1), input_error);
    CHECK_THROWS_AS((void)dimension_bound(Rat(1, 4), Rat(4), 0), input_error);
}

TEST_CASE("dimension bound is invariant under (a0, b) -> (a0^k, b^k)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        long p = 2 + (long)(rng() % 50);
        long q = p + 1 + (long)(rng() % 50);
        Rat a0(p, q); /* in (0,1) */
        Rat b(q * q, p); /* > 1 */
        DimensionBound base = dimension_bound(a0, b, 1);
        int k = 2 + (int)(rng() % 3);
        DimensionBound powered = dimension_bound(rat_pow(a0, k), rat_pow(b, k), 1);
        CHECK(std::fabs(base.value - powered.value) < 1e-12 * std::max(1.0, base.value));
        CHECK(base.count == powered.count);
    }
}

TEST_CASE("certificate smoke run on the geometric series") {
    GFunctionSpec spec = polylog_spec();
    CertifyConfig config;
    config.r = 1;
    config.n1 = 31;
    config.n2 = 52;
    config.bits = 192;
    Certificate cert = certify(spec, Rat(1, 2), 3, config);
    CHECK(cert.S == 3);
    CHECK(cert.r == 1);
    CHECK(cert.n1 == 31);
    CHECK(cert.n2 == 52);
    CHECK(cert.a0_emp > 0.0);
    CHECK(cert.a0_emp < 1.0);
    CHECK(cert.b_emp > 1.0);
    CHECK(cert.has_bound);
    CHECK(cert.bound >= 1.0);
    CHECK(!cert.caveats.empty());
    CHECK(cert.tau_log.size() == (size_t)(cert.n2 - cert.n1 + 1));

    /* the report serialization is byte-deterministic */
    Json one = report_certificate(cert);
    Json two = report_certificate(cert);
    CHECK(one.dump(2) == two.dump(2));
    Certificate again = certify(spec, Rat(1, 2), 3, config);
    CHECK(report_certificate(again).dump(2) == one.dump(2));
}
