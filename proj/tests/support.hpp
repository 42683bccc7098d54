#pragma once

// Test-side numeric oracles, deliberately independent of the library code
// under test: a composite Simpson integrator, a golden-section maximizer,
// and a seeded RNG helper for property-style sampling.

#include <cmath>
#include <functional>
#include <random>

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846;

// Composite Simpson rule; panel count is doubled to an even grid.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels = 20000) {
    if (panels % 2 != 0) ++panels;
    const double h = (b - a) / panels;
    double acc = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

// J_n(x) from the integral representation (1/pi) int_0^pi cos(n t - x sin t) dt.
inline double bessel_j_reference(int n, double x) {
    return simpson([&](double t) { return std::cos(n * t - x * std::sin(t)); }, 0.0, kPi) /
           kPi;
}

// e^{-x} I_n(x) from (1/pi) int_0^pi e^{x (cos t - 1)} cos(n t) dt.
inline double bessel_i_scaled_reference(int n, double x) {
    return simpson([&](double t) { return std::exp(x * (std::cos(t) - 1.0)) * std::cos(n * t); },
                   0.0, kPi) /
           kPi;
}

// Golden-section maximum of a unimodal function on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-10) {
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng());
}

inline double rand_real(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng());
}

}  // namespace testsupport
