#include <doctest.h>

#include <cmath>

#include "ringwalk/bessel.hpp"
#include "ringwalk/infinite.hpp"
#include "support.hpp"

using namespace ringwalk;

// first positive zero of J_0
static constexpr double kJ0Zero1 = 2.404825557695773;

TEST_CASE("t = 0 reduces to the initial condition") {
    for (int m : {1, 2, 5}) {
        CHECK(infinite_classical(m, 0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(infinite_quantum(m, 0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        for (int d : {1, 4}) {
            CHECK(std::abs(infinite_classical(m, d, 0.0)) < 1e-12);
            CHECK(std::abs(infinite_quantum(m, d, 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("m = 1 quadrature equals the Bessel closed forms") {
    for (double t : {0.1, 1.0, 5.0, 20.0, 50.0}) {
        for (int d : {0, 1, 3, 7, 15, 30}) {
            CAPTURE(t);
            CAPTURE(d);
            CHECK(std::abs(infinite_quantum(1, d, t) - bessel_m1(WalkKind::quantum, d, t)) <
                  1e-8);
            CHECK(std::abs(infinite_classical(1, d, t) - bessel_m1(WalkKind::classical, d, t)) <
                  1e-8);
        }
    }
}

TEST_CASE("classical m = 1 closed case e^{-5} I_3(5)") {
    const double value = infinite_classical(1, 3, 2.5);
    CHECK(value == doctest::Approx(bessel_i_scaled(3, 5.0)).epsilon(1e-10));
    CHECK(value == doctest::Approx(0.0696107422793332).epsilon(1e-10));
}

TEST_CASE("quantum return vanishes at half the first J_0 zero") {
    CHECK(infinite_quantum(1, 0, kJ0Zero1 / 2.0) < 1e-9);
    CHECK(bessel_m1(WalkKind::quantum, 0, kJ0Zero1 / 2.0) < 1e-18);
}

TEST_CASE("values stay inside probability bounds") {
    for (int trial = 0; trial < 30; ++trial) {
        const int m = testsupport::rand_int(1, 4);
        const int d = testsupport::rand_int(0, 20);
        const double t = testsupport::rand_real(0.0, 15.0);
        const double q = infinite_quantum(m, d, t);
        const double c = infinite_classical(m, d, t);
        CHECK(q <= 1.0 + 1e-12);
        CHECK(q >= 0.0);
        CHECK(c >= -1e-12);
        CHECK(c <= 1.0 + 1e-12);
    }
}

TEST_CASE("quadrature is stable under a tighter error target") {
    QuadratureConfig tight;
    tight.target_abs_error = 1e-12;
    for (auto [m, d, t] : {std::tuple{2, 5, 3.0}, {3, 12, 4.5}, {2, 0, 9.0}}) {
        CHECK(std::abs(infinite_quantum(m, d, t) - infinite_quantum(m, d, t, tight)) < 1e-9);
        CHECK(std::abs(infinite_classical(m, d, t) - infinite_classical(m, d, t, tight)) <
              1e-9);
    }
}

TEST_CASE("distance sign never matters") {
    for (auto [m, d, t] : {std::tuple{1, 4, 2.0}, {3, 9, 1.5}}) {
        CHECK(infinite_quantum(m, d, t) == infinite_quantum(m, -d, t));
        CHECK(infinite_classical(m, d, t) == infinite_classical(m, -d, t));
    }
}

TEST_CASE("no-wrap finite lattice reproduces the infinite values") {
    const NoWrapReport r0 = no_wrap_check(WalkKind::quantum, 1, 0, 0.0);
    CHECK(r0.infinite_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r0.finite_value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r0.discrepancy < 1e-12);

    const NoWrapReport r1 = no_wrap_check(WalkKind::quantum, 1, 0, 1.0);
    CHECK(r1.discrepancy < 1e-8);

    const NoWrapReport r2 = no_wrap_check(WalkKind::quantum, 3, 10, 2.0);
    CHECK(r2.discrepancy < 1e-6);

    const NoWrapReport r3 = no_wrap_check(WalkKind::classical, 2, 6, 3.0);
    CHECK(r3.discrepancy < 1e-8);

    // the chosen ring is always a valid lattice
    CHECK(no_wrap_lattice_size(8, 0, 0.0) >= 2 * 8 + 1);
}

TEST_CASE("quadrature failure carries the achieved error") {
    QuadratureConfig impossible;
    impossible.target_abs_error = 1e-16;
    impossible.max_panels = 128;
    try {
        infinite_quantum(3, 10, 8.0, impossible);
        FAIL("expected quadrature error");
    } catch (const QuadratureError& e) {
        CHECK(e.target_error == 1e-16);
        CHECK(e.achieved_error >= 0.0);
    }
    CHECK_THROWS_AS(infinite_quantum(1, 0, -1.0), ConstraintError);
    QuadratureConfig bad;
    bad.target_abs_error = 0.0;
    CHECK_THROWS_AS(infinite_quantum(1, 0, 1.0, bad), ConstraintError);
}
