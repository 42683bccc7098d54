#include "ringwalk/infinite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "ringwalk/bessel.hpp"

namespace ringwalk {
namespace {

constexpr int kGaussOrder = 8;

struct GaussRule {
    std::array<double, kGaussOrder> nodes;    // on [-1, 1]
    std::array<double, kGaussOrder> weights;
};

// Nodes via Newton on the Legendre recurrence; one-time cost.
GaussRule make_gauss_rule() {
    GaussRule rule{};
    const int n = kGaussOrder;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

// Integrand phase/exponent sum_{j=1..m} cos(j theta) and its 1-cos variant.
double cos_sum(int m, double theta) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += std::cos(j * theta);
    return acc;
}

long base_panels(int m, int d, double t) {
    const double oscillation = static_cast<double>(m) * (m + 1) * t + std::abs(d);
    const double p = 8.0 * std::ceil(oscillation);
    return std::max(64L, static_cast<long>(p));
}

// Composite Gauss-Legendre of f over [0, pi] with `panels` subintervals.
template <typename F>
Complex composite_integral(long panels, F&& f) {
    const GaussRule& rule = gauss_rule();
    const double width = std::numbers::pi / panels;
    Complex acc(0.0, 0.0);
    for (long p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * width;
        for (int i = 0; i < kGaussOrder; ++i) {
            const double theta = mid + 0.5 * width * rule.nodes[i];
            acc += rule.weights[i] * f(theta);
        }
    }
    return acc * (0.5 * width);
}

// Doubles the panel count until two successive composite estimates agree.
template <typename F>
Complex adaptive_integral(int m, int d, double t, const QuadratureConfig& config, F&& f) {
    config.validate();
    long panels = base_panels(m, d, t);
    if (panels > config.max_panels) {
        std::ostringstream os;
        os << "oscillation count needs " << panels << " base panels, above the cap "
           << config.max_panels << " (m=" << m << ", d=" << d << ", t=" << t << ")";
        throw QuadratureError(os.str(), std::numeric_limits<double>::infinity(),
                              config.target_abs_error);
    }
    Complex prev = composite_integral(panels, f);
    double last_diff = std::numeric_limits<double>::infinity();
    while (panels * 2 <= config.max_panels) {
        panels *= 2;
        const Complex cur = composite_integral(panels, f);
        last_diff = std::abs(cur - prev);
        if (last_diff <= config.target_abs_error) return cur;
        prev = cur;
    }
    std::ostringstream os;
    os << "quadrature did not converge below " << config.target_abs_error << " within "
       << config.max_panels << " panels (m=" << m << ", d=" << d << ", t=" << t
       << "); last refinement moved " << last_diff;
    throw QuadratureError(os.str(), last_diff, config.target_abs_error);
}

}  // namespace

void QuadratureConfig::validate() const {
    if (target_abs_error <= 0.0) throw ConstraintError("quadrature target error must be > 0");
    if (max_panels < 128) throw ConstraintError("quadrature panel cap must be at least 128");
}

double infinite_classical(int connectivity, int distance, double t,
                          const QuadratureConfig& config) {
    if (connectivity < 1) throw ConstraintError("infinite lattice requires m >= 1");
    if (t < 0.0) throw ConstraintError("time must be non-negative");
    const int m = connectivity;
    const int d = std::abs(distance);
    // e^{-2mt} folded into the exponent keeps the integrand in [0, 1].
    const Complex integral = adaptive_integral(m, d, t, config, [&](double theta) {
        const double decay = -2.0 * t * (m - cos_sum(m, theta));
        return Complex(std::cos(d * theta) * std::exp(decay), 0.0);
    });
    double value = integral.real() / std::numbers::pi;
    if (value < -1e-9 || value > 1.0 + 1e-9) {
        std::ostringstream os;
        os << "classical quadrature value " << value << " outside [0,1]";
        throw NumericError(os.str());
    }
    return std::clamp(value, 0.0, 1.0);
}

double infinite_quantum(int connectivity, int distance, double t,
                        const QuadratureConfig& config) {
    if (connectivity < 1) throw ConstraintError("infinite lattice requires m >= 1");
    if (t < 0.0) throw ConstraintError("time must be non-negative");
    const int m = connectivity;
    const int d = std::abs(distance);
    const Complex integral = adaptive_integral(m, d, t, config, [&](double theta) {
        const double phase = 2.0 * t * cos_sum(m, theta);
        return std::cos(d * theta) * Complex(std::cos(phase), std::sin(phase));
    });
    const double value = std::norm(integral / std::numbers::pi);
    if (value > 1.0 + 1e-9) {
        std::ostringstream os;
        os << "quantum quadrature value " << value << " exceeds 1";
        throw NumericError(os.str());
    }
    return std::min(value, 1.0);
}

double bessel_m1(WalkKind kind, int distance, double t) {
    if (t < 0.0) throw ConstraintError("time must be non-negative");
    const int d = std::abs(distance);
    if (kind == WalkKind::classical) {
        return bessel_i_scaled(d, 2.0 * t);
    }
    const double j = bessel_j(d, 2.0 * t);
    return j * j;
}

int no_wrap_lattice_size(int connectivity, int distance, double t) {
    const double front = static_cast<double>(connectivity) * (connectivity + 1) * t +
                         std::abs(distance);
    if (!(front < 5e7)) {
        std::ostringstream os;
        os << "no-wrap ring for m=" << connectivity << ", t=" << t
           << " would need more than 1e8 nodes";
        throw ConstraintError(os.str());
    }
    const int n = 2 * static_cast<int>(std::ceil(front)) + 16;
    return std::max(n, 2 * connectivity + 2);
}

NoWrapReport no_wrap_check(WalkKind kind, int connectivity, int distance, double t,
                           const QuadratureConfig& config) {
    NoWrapReport report;
    report.lattice_size = no_wrap_lattice_size(connectivity, distance, t);
    report.infinite_value = kind == WalkKind::classical
                                ? infinite_classical(connectivity, distance, t, config)
                                : infinite_quantum(connectivity, distance, t, config);

    const LatticeSpec lattice = LatticeSpec::ring(report.lattice_size, connectivity);
    const int n = report.lattice_size;
    const int target = ((distance % n) + n) % n;
    const TimeGrid grid = TimeGrid::from_points({t});
    const ProbabilitySeries series =
        kind == WalkKind::classical ? classical_probability(lattice, 0, target, grid)
                                    : quantum_probability(lattice, 0, target, grid);
    report.finite_value = series.values.front();
    report.discrepancy = std::abs(report.infinite_value - report.finite_value);
    return report;
}

}  // namespace ringwalk
