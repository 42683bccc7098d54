#include <doctest.h>

#include <cmath>

#include "ringwalk/bessel.hpp"
#include "ringwalk/errors.hpp"
#include "support.hpp"

using ringwalk::bessel_i_scaled;
using ringwalk::bessel_j;

TEST_CASE("bessel_j against reference values") {
    // high-precision references
    CHECK(bessel_j(0, 0.0) == 1.0);
    CHECK(bessel_j(3, 0.0) == 0.0);
    CHECK(bessel_j(0, 1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-13));
    CHECK(bessel_j(1, 1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-13));
    CHECK(bessel_j(0, 2.0) == doctest::Approx(0.2238907791412357).epsilon(1e-13));
    CHECK(bessel_j(2, 7.5) == doctest::Approx(-0.2302734105257903).epsilon(1e-13));
    CHECK(bessel_j(5, 10.0) == doctest::Approx(-0.2340615281867936).epsilon(1e-13));
    CHECK(bessel_j(0, 15.0) == doctest::Approx(-0.0142244728267808).epsilon(1e-12));
    CHECK(bessel_j(12, 30.0) == doctest::Approx(0.1482533510996601).epsilon(1e-13));
    CHECK(bessel_j(30, 40.0) == doctest::Approx(-0.1040859497656497).epsilon(1e-13));
    CHECK(bessel_j(30, 10.0) == doctest::Approx(1.551096078257467e-12).epsilon(1e-12));
}

TEST_CASE("bessel_i_scaled against reference values") {
    CHECK(bessel_i_scaled(0, 0.0) == 1.0);
    CHECK(bessel_i_scaled(2, 0.0) == 0.0);
    CHECK(bessel_i_scaled(0, 1.0) == doctest::Approx(0.4657596075936404).epsilon(1e-13));
    CHECK(bessel_i_scaled(3, 5.0) == doctest::Approx(0.0696107422793332).epsilon(1e-13));
    CHECK(bessel_i_scaled(0, 40.0) == doctest::Approx(0.0632782798752353).epsilon(1e-13));
    CHECK(bessel_i_scaled(10, 40.0) == doctest::Approx(0.0179640351638683).epsilon(1e-13));
    CHECK(bessel_i_scaled(0, 160.0) == doctest::Approx(0.0315638836855987).epsilon(1e-13));
    CHECK(bessel_i_scaled(25, 12.0) == doctest::Approx(4.349581575738329e-11).epsilon(1e-12));
}

TEST_CASE("bessel_j agrees with the integral-representation oracle") {
    for (int n : {0, 1, 2, 5, 9, 16, 25}) {
        for (double x : {0.3, 2.0, 7.9, 8.1, 12.0, 25.0, 60.0, 140.0}) {
            const double want = testsupport::bessel_j_reference(n, x);
            CAPTURE(n);
            CAPTURE(x);
            CHECK(std::abs(bessel_j(n, x) - want) < 2e-12);
        }
    }
}

TEST_CASE("bessel_i_scaled agrees with the integral-representation oracle") {
    for (int n : {0, 1, 3, 8, 14, 22}) {
        for (double x : {0.5, 3.0, 7.9, 8.1, 16.0, 50.0, 200.0, 400.0}) {
            const double want = testsupport::bessel_i_scaled_reference(n, x);
            CAPTURE(n);
            CAPTURE(x);
            CHECK(std::abs(bessel_i_scaled(n, x) - want) < 2e-12);
        }
    }
}

TEST_CASE("bessel sum rules") {
    // J_0(x) + 2 sum_{k>=1} J_{2k}(x) = 1
    for (double x : {0.7, 5.0, 13.0, 37.5}) {
        double acc = bessel_j(0, x);
        for (int k = 1; k <= static_cast<int>(x) + 40; ++k) {
            acc += 2.0 * bessel_j(2 * k, x);
        }
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
    // e^{-x}(I_0 + 2 sum I_k) = 1
    for (double x : {0.9, 6.0, 21.0, 300.0}) {
        double acc = bessel_i_scaled(0, x);
        for (int k = 1; k <= static_cast<int>(x) + 60; ++k) {
            acc += 2.0 * bessel_i_scaled(k, x);
        }
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("negative orders and domain errors") {
    CHECK(bessel_j(-3, 4.2) == -bessel_j(3, 4.2));
    CHECK(bessel_j(-4, 4.2) == bessel_j(4, 4.2));
    CHECK(bessel_i_scaled(-5, 2.5) == bessel_i_scaled(5, 2.5));
    CHECK_THROWS_AS(bessel_j(0, -1.0), ringwalk::ConstraintError);
    CHECK_THROWS_AS(bessel_i_scaled(0, -0.5), ringwalk::ConstraintError);
}

TEST_CASE("recurrence continuity across the series/recurrence cutoff") {
    for (int n : {0, 1, 4, 11}) {
        const double below = bessel_j(n, 7.999999);
        const double above = bessel_j(n, 8.000001);
        CHECK(std::abs(below - above) < 1e-6);  // smooth function, tiny step
    }
}
