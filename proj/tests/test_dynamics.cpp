#include <doctest.h>

#include <cmath>
#include <complex>

#include "ringwalk/dynamics.hpp"
#include "support.hpp"

using namespace ringwalk;

namespace {

// closed forms for the 4-cycle, from the four-term Bloch sum with
// E = (0, 2, 4, 2):
//   d=0: alpha = e^{-2it} cos^2 t      -> pi = cos^4 t
//   d=1: alpha = (1 - e^{-4it}) / 4    -> pi = sin^2(2t) / 4
//   d=2: alpha = -e^{-2it} sin^2 t     -> pi = sin^4 t
double cycle4_quantum(int d, double t) {
    switch (d % 4) {
        case 0: return std::pow(std::cos(t), 4);
        case 2: return std::pow(std::sin(t), 4);
        default: return 0.25 * std::pow(std::sin(2.0 * t), 2);
    }
}

// classical 4-cycle: p(d=0) = (1 + 2e^{-2t} + e^{-4t})/4, p(d=1) = (1 - e^{-4t})/4,
// p(d=2) = (1 - 2e^{-2t} + e^{-4t})/4
double cycle4_classical(int d, double t) {
    const double e2 = std::exp(-2.0 * t), e4 = std::exp(-4.0 * t);
    switch (d % 4) {
        case 0: return 0.25 * (1.0 + 2.0 * e2 + e4);
        case 2: return 0.25 * (1.0 - 2.0 * e2 + e4);
        default: return 0.25 * (1.0 - e4);
    }
}

}  // namespace

TEST_CASE("time grid validation") {
    CHECK_THROWS_AS(TimeGrid::from_points({}), ConstraintError);
    CHECK_THROWS_AS(TimeGrid::from_points({1.0, 1.0}), ConstraintError);
    CHECK_THROWS_AS(TimeGrid::from_points({-0.5, 1.0}), ConstraintError);
    CHECK_THROWS_AS(TimeGrid::logarithmic(0.0, 10.0, 5), ConstraintError);
    CHECK_THROWS_AS(TimeGrid::linear(2.0, 1.0, 5), ConstraintError);

    const TimeGrid lin = TimeGrid::linear(0.0, 1.0, 5);
    CHECK(lin.points == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const TimeGrid log = TimeGrid::logarithmic(0.01, 100.0, 5);
    CHECK(log.points.front() == doctest::Approx(0.01));
    CHECK(log.points.back() == doctest::Approx(100.0));
    CHECK(log.points[2] == doctest::Approx(1.0));
}

TEST_CASE("quantum amplitudes on the 4-cycle match the closed forms") {
    const LatticeSpec lattice = LatticeSpec::ring(4, 1);
    const TimeGrid grid = TimeGrid::linear(0.0, 6.0, 61);
    for (int d = 0; d < 4; ++d) {
        const auto series = quantum_probability(lattice, 0, d, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(series.values[i] - cycle4_quantum(d, grid.points[i])) < 1e-13);
        }
    }
    // spot values: perfect transfer and the quarter-period points
    CHECK(quantum_probability(lattice, 0, 0, TimeGrid::from_points({testsupport::kPi / 4}))
              .values.front() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(quantum_probability(lattice, 0, 2, TimeGrid::from_points({testsupport::kPi / 2}))
              .values.front() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quantum_probability(lattice, 0, 1, TimeGrid::from_points({testsupport::kPi / 4}))
              .values.front() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("classical probabilities on the 4-cycle match the closed forms") {
    const LatticeSpec lattice = LatticeSpec::ring(4, 1);
    const TimeGrid grid = TimeGrid::linear(0.0, 8.0, 33);
    for (int d = 0; d < 4; ++d) {
        const auto series = classical_probability(lattice, 0, d, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            CHECK(std::abs(series.values[i] - cycle4_classical(d, grid.points[i])) < 1e-13);
        }
    }
    const auto at_ln2 =
        classical_probability(lattice, 0, 1, TimeGrid::from_points({std::log(2.0) / 4.0}));
    CHECK(at_ln2.values.front() == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("t = 0 is the identity for both kinds") {
    for (auto [n, m] : {std::pair{7, 2}, {16, 3}, {100, 1}}) {
        const LatticeSpec lattice = LatticeSpec::ring(n, m);
        const TimeGrid zero = TimeGrid::from_points({0.0});
        const auto amp = quantum_amplitude(lattice, 2, 2, zero);
        CHECK(std::abs(amp.values.front() - Complex(1.0, 0.0)) < 1e-12);
        for (int k = 0; k < n; ++k) {
            const double want = k == 2 ? 1.0 : 0.0;
            CHECK(std::abs(quantum_probability(lattice, 2, k, zero).values.front() - want) <
                  1e-12);
            CHECK(std::abs(classical_probability(lattice, 2, k, zero).values.front() - want) <
                  1e-12);
        }
    }
}

TEST_CASE("classical equipartition at N = 100") {
    const LatticeSpec lattice = LatticeSpec::ring(100, 3);
    const TimeGrid grid = TimeGrid::from_points({200.0});
    for (int k : {0, 13, 50, 99}) {
        const auto p = classical_probability(lattice, 0, k, grid);
        CHECK(std::abs(p.values.front() - 0.01) < 1e-6);
    }
    // m = 2 snapshot row at large t is flat to the same tolerance
    const auto snap = distribution_snapshot(LatticeSpec::ring(100, 2), 0,
                                            WalkKind::classical, TimeGrid::from_points({600.0}));
    for (int k = 0; k < 100; ++k) {
        CHECK(std::abs(snap.at(0, k) - 0.01) < 1e-6);
    }
}

TEST_CASE("snapshot rows are normalized distributions") {
    const LatticeSpec lattice = LatticeSpec::ring(100, 1);
    const TimeGrid grid = TimeGrid::linear(0.0, 30.0, 16);
    const auto snap = distribution_snapshot(lattice, 0, WalkKind::quantum, grid);
    CHECK(snap.at(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k < 100; ++k) CHECK(snap.at(0, k) < 1e-12);
    for (size_t ti = 0; ti < grid.size(); ++ti) {
        double row = 0.0;
        for (int k = 0; k < 100; ++k) row += snap.at(ti, k);
        CHECK(std::abs(row - 1.0) < 1e-10);
    }

    const auto row_pi_half = distribution_snapshot(
        LatticeSpec::ring(4, 1), 0, WalkKind::quantum,
        TimeGrid::from_points({testsupport::kPi / 2}));
    CHECK(row_pi_half.at(0, 0) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(row_pi_half.at(0, 1) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(row_pi_half.at(0, 2) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(row_pi_half.at(0, 3) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("normalization property under random sampling") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = testsupport::rand_int(3, 200);
        const int m = testsupport::rand_int(1, (n - 1) / 2);
        const double t = testsupport::rand_real(0.0, 50.0);
        const WalkKind kind = trial % 2 == 0 ? WalkKind::quantum : WalkKind::classical;
        const auto snap = distribution_snapshot(LatticeSpec::ring(n, m), 0, kind,
                                                TimeGrid::from_points({t}));
        double total = 0.0;
        for (int k = 0; k < n; ++k) total += snap.at(0, k);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(t);
        CHECK(std::abs(total - 1.0) < 1e-10);
    }
}

TEST_CASE("translation invariance is bit-exact") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = testsupport::rand_int(3, 120);
        const int m = testsupport::rand_int(1, (n - 1) / 2);
        const int j = testsupport::rand_int(0, n - 1);
        const int k = testsupport::rand_int(0, n - 1);
        const int shift = testsupport::rand_int(0, n - 1);
        const LatticeSpec lattice = LatticeSpec::ring(n, m);
        const TimeGrid grid = TimeGrid::logarithmic(0.05, 40.0, 9);
        const auto base = quantum_probability(lattice, j, k, grid);
        const auto moved =
            quantum_probability(lattice, (j + shift) % n, (k + shift) % n, grid);
        CHECK(base.values == moved.values);
        const auto base_c = classical_probability(lattice, j, k, grid);
        const auto moved_c =
            classical_probability(lattice, (j + shift) % n, (k + shift) % n, grid);
        CHECK(base_c.values == moved_c.values);
    }
}

TEST_CASE("distance symmetry pi(d) = pi(N-d)") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = testsupport::rand_int(4, 150);
        const int m = testsupport::rand_int(1, (n - 1) / 2);
        const int d = testsupport::rand_int(1, n - 1);
        const double t = testsupport::rand_real(0.0, 30.0);
        const LatticeSpec lattice = LatticeSpec::ring(n, m);
        const TimeGrid grid = TimeGrid::from_points({t});
        const double fwd = quantum_probability(lattice, 0, d, grid).values.front();
        const double bwd = quantum_probability(lattice, 0, n - d, grid).values.front();
        CHECK(std::abs(fwd - bwd) < 1e-12);
    }
}

TEST_CASE("amplitude magnitude stays inside the unit disc") {
    const LatticeSpec lattice = LatticeSpec::ring(37, 5);
    const TimeGrid grid = TimeGrid::logarithmic(0.01, 80.0, 40);
    for (int k : {0, 5, 18}) {
        const auto amp = quantum_amplitude(lattice, 0, k, grid);
        for (const Complex& a : amp.values) CHECK(std::abs(a) <= 1.0 + 1e-12);
    }
}

TEST_CASE("node range errors") {
    const LatticeSpec lattice = LatticeSpec::ring(10, 2);
    const TimeGrid grid = TimeGrid::from_points({1.0});
    CHECK_THROWS_AS(quantum_probability(lattice, -1, 0, grid), ConstraintError);
    CHECK_THROWS_AS(quantum_probability(lattice, 0, 10, grid), ConstraintError);
    CHECK_THROWS_AS(distribution_snapshot(lattice, 11, WalkKind::quantum, grid),
                    ConstraintError);
}

TEST_CASE("return probability is the d = 0 case, not a separate path") {
    const LatticeSpec lattice = LatticeSpec::ring(100, 2);
    const TimeGrid grid = TimeGrid::logarithmic(0.1, 50.0, 25);
    const Spectrum spec = bloch_eigenvalues(lattice);
    const auto quantum = quantum_probability(lattice, 7, 7, grid);
    const auto classical = classical_probability(lattice, 7, 7, grid);
    for (size_t i = 0; i < grid.size(); ++i) {
        // eigenvalue-only forms of the return probabilities
        Complex amp(0.0, 0.0);
        double cls = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double t = grid.points[i];
            amp += std::exp(Complex(0.0, -t * spec.eigenvalues[k]));
            cls += std::exp(-t * spec.eigenvalues[k]);
        }
        CHECK(std::abs(quantum.values[i] - std::norm(amp / 100.0)) < 1e-12);
        CHECK(std::abs(classical.values[i] - cls / 100.0) < 1e-12);
    }
}
