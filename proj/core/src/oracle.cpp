#include "ringwalk/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ringwalk::oracle {
namespace {

constexpr int kDenseSizeCap = 512;
constexpr int kOdeSizeCap = 256;
constexpr double kOdePhaseBudget = 2e-9;  // accumulated RK4 phase error target

// Cyclic Jacobi sweeps; symmetric input assumed. Converges quadratically;
// the off-diagonal mass bottoms out at the roundoff floor, so the exit test
// is scale-relative with a stall check.
void jacobi(std::vector<double>& a, std::vector<double>& v, int n) {
    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) at(v, i, j) = i == j ? 1.0 : 0.0;
    }
    double frobenius2 = 0.0;
    for (double x : a) frobenius2 += x * x;
    const double target = 1e-26 * std::max(1.0, frobenius2);
    double previous_off = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) off += at(a, p, q) * at(a, p, q);
        }
        if (off <= target || off >= previous_off) return;
        previous_off = off;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (apq == 0.0) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p);
                    const double akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p, k);
                    const double aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p);
                    const double vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    throw NumericError("jacobi eigensolver failed to converge in 64 sweeps");
}

void require_dense(const LatticeSpec& lattice, int cap, const char* what) {
    if (lattice.size() > cap) {
        std::ostringstream os;
        os << what << " is limited to N <= " << cap << ", got N = " << lattice.size();
        throw ConstraintError(os.str());
    }
}

// y = A x for the circulant Laplacian: y[i] = 2m x[i] - sum_{z=1..m} (x[i-z] + x[i+z]).
// Written against the ring structure directly, not the Bloch cosines.
template <typename T>
void apply_laplacian(const LatticeSpec& lattice, const std::vector<T>& x, std::vector<T>& y) {
    const int n = lattice.size();
    const int m = lattice.connectivity();
    for (int i = 0; i < n; ++i) {
        T acc = static_cast<double>(2 * m) * x[i];
        for (int z = 1; z <= m; ++z) {
            acc -= x[(i + z) % n];
            acc -= x[(i - z + n) % n];
        }
        y[i] = acc;
    }
}

// One RK4 step of x' = scale * A x (scale is -1 for the master equation,
// -i for the amplitude equation).
template <typename T>
void rk4_step(const LatticeSpec& lattice, T scale, double h, std::vector<T>& x,
              std::array<std::vector<T>, 5>& work) {
    const int n = lattice.size();
    auto& k1 = work[0];
    auto& k2 = work[1];
    auto& k3 = work[2];
    auto& k4 = work[3];
    auto& tmp = work[4];

    apply_laplacian(lattice, x, k1);
    for (int i = 0; i < n; ++i) k1[i] *= scale;
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + (0.5 * h) * k1[i];
    apply_laplacian(lattice, tmp, k2);
    for (int i = 0; i < n; ++i) k2[i] *= scale;
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + (0.5 * h) * k2[i];
    apply_laplacian(lattice, tmp, k3);
    for (int i = 0; i < n; ++i) k3[i] *= scale;
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
    apply_laplacian(lattice, tmp, k4);
    for (int i = 0; i < n; ++i) k4[i] *= scale;
    for (int i = 0; i < n; ++i) {
        x[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

double ode_step_bound(const LatticeSpec& lattice, double horizon, double max_step) {
    const double spectral_radius = 4.0 * lattice.connectivity();
    const double stability = 0.05 / spectral_radius;
    if (max_step > 0.0 && max_step > stability + 1e-15) {
        std::ostringstream os;
        os << "requested ODE step " << max_step << " violates the bound 0.05/(4m) = "
           << stability;
        throw ConstraintError(os.str());
    }
    // accumulated phase error ~ T * (E h)^4 E / 120 must stay inside the budget
    double accuracy = stability;
    if (horizon > 0.0) {
        accuracy = std::pow(120.0 * kOdePhaseBudget /
                                (horizon * std::pow(spectral_radius, 5)),
                            0.25);
    }
    double h = std::min(stability, accuracy);
    if (max_step > 0.0) h = std::min(h, max_step);
    return h;
}

template <typename T>
SnapshotMatrix ode_run(const LatticeSpec& lattice, int source, const TimeGrid& grid,
                       T scale, double max_step,
                       double (*to_probability)(const T&)) {
    const int n = lattice.size();
    const double horizon = grid.points.back();
    const double h_bound = ode_step_bound(lattice, horizon, max_step);

    std::vector<T> state(n, T{});
    state[source] = T{1.0};
    std::array<std::vector<T>, 5> work;
    for (auto& w : work) w.assign(n, T{});

    SnapshotMatrix out{lattice, WalkKind::classical, source, grid, {}};
    out.values.resize(grid.size() * static_cast<size_t>(n));

    double t = 0.0;
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        const double target = grid.points[gi];
        const double span = target - t;
        if (span > 0.0) {
            const long steps = std::max(1L, static_cast<long>(std::ceil(span / h_bound)));
            const double h = span / static_cast<double>(steps);
            for (long s = 0; s < steps; ++s) rk4_step(lattice, scale, h, state, work);
            t = target;
        }
        for (int i = 0; i < n; ++i) out.values[gi * n + i] = to_probability(state[i]);
    }
    return out;
}

double real_identity(const double& x) { return x; }
double complex_norm(const Complex& z) { return std::norm(z); }

SnapshotMatrix snapshot_from_eigensystem(const DenseEigenSystem& sys,
                                         const LatticeSpec& lattice, int source,
                                         WalkKind kind, const TimeGrid& grid) {
    const int n = sys.n;
    SnapshotMatrix out{lattice, kind, source, grid, {}};
    out.values.resize(grid.size() * static_cast<size_t>(n));
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        const double t = grid.points[gi];
        if (kind == WalkKind::classical) {
            for (int k = 0; k < n; ++k) {
                double acc = 0.0;
                for (int e = 0; e < n; ++e) {
                    acc += std::exp(-t * sys.eigenvalues[e]) * sys.vec(e, k) * sys.vec(e, source);
                }
                out.values[gi * n + k] = acc;
            }
        } else {
            for (int k = 0; k < n; ++k) {
                Complex acc(0.0, 0.0);
                for (int e = 0; e < n; ++e) {
                    const double phase = -t * sys.eigenvalues[e];
                    acc += Complex(std::cos(phase), std::sin(phase)) *
                           (sys.vec(e, k) * sys.vec(e, source));
                }
                out.values[gi * n + k] = std::norm(acc);
            }
        }
    }
    return out;
}

}  // namespace

DenseEigenSystem dense_eigensystem(const IntMatrix& matrix) {
    const int n = matrix.n;
    std::vector<double> a(matrix.a.begin(), matrix.a.end());
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    jacobi(a, v, n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
        return a[static_cast<size_t>(p) * n + p] < a[static_cast<size_t>(q) * n + q];
    });

    DenseEigenSystem sys;
    sys.n = n;
    sys.eigenvalues.resize(n);
    sys.eigenvectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        sys.eigenvalues[k] = a[static_cast<size_t>(order[k]) * n + order[k]];
        for (int i = 0; i < n; ++i) {
            sys.eigenvectors[static_cast<size_t>(k) * n + i] =
                v[static_cast<size_t>(i) * n + order[k]];
        }
    }
    return sys;
}

SnapshotMatrix oracle_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                               const TimeGrid& grid) {
    require_dense(lattice, kDenseSizeCap, "dense-eigen oracle");
    lattice.require_node(source, "source");
    const DenseEigenSystem sys = dense_eigensystem(build_laplacian(lattice));
    return snapshot_from_eigensystem(sys, lattice, source, kind, grid);
}

ProbabilitySeries oracle_probabilities(const LatticeSpec& lattice, int source, int target,
                                       WalkKind kind, const TimeGrid& grid) {
    lattice.require_node(target, "target");
    const SnapshotMatrix snap = oracle_snapshot(lattice, source, kind, grid);
    ProbabilitySeries out{lattice, kind, source, target, grid, {}};
    out.values.reserve(grid.size());
    for (size_t gi = 0; gi < grid.size(); ++gi) out.values.push_back(snap.at(gi, target));
    return out;
}

SnapshotMatrix oracle_ode_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                                   const TimeGrid& grid, double max_step) {
    require_dense(lattice, kOdeSizeCap, "ODE oracle");
    lattice.require_node(source, "source");
    SnapshotMatrix out =
        kind == WalkKind::classical
            ? ode_run<double>(lattice, source, grid, -1.0, max_step, real_identity)
            : ode_run<Complex>(lattice, source, grid, Complex(0.0, -1.0), max_step,
                               complex_norm);
    out.kind = kind;
    return out;
}

ProbabilitySeries oracle_ode(const LatticeSpec& lattice, int source, int target,
                             WalkKind kind, const TimeGrid& grid, double max_step) {
    lattice.require_node(target, "target");
    const SnapshotMatrix snap = oracle_ode_snapshot(lattice, source, kind, grid, max_step);
    ProbabilitySeries out{lattice, kind, source, target, grid, {}};
    out.values.reserve(grid.size());
    for (size_t gi = 0; gi < grid.size(); ++gi) out.values.push_back(snap.at(gi, target));
    return out;
}

double AgreementReport::worst() const {
    return std::max({bloch_vs_dense, bloch_vs_ode, dense_vs_ode});
}

AgreementReport three_way_agreement(const LatticeSpec& lattice, int source, WalkKind kind,
                                    const TimeGrid& grid) {
    const SnapshotMatrix bloch = distribution_snapshot(lattice, source, kind, grid);
    const SnapshotMatrix dense = oracle_snapshot(lattice, source, kind, grid);
    const SnapshotMatrix ode = oracle_ode_snapshot(lattice, source, kind, grid);

    AgreementReport report;
    for (size_t i = 0; i < bloch.values.size(); ++i) {
        report.bloch_vs_dense =
            std::max(report.bloch_vs_dense, std::abs(bloch.values[i] - dense.values[i]));
        report.bloch_vs_ode =
            std::max(report.bloch_vs_ode, std::abs(bloch.values[i] - ode.values[i]));
        report.dense_vs_ode =
            std::max(report.dense_vs_ode, std::abs(dense.values[i] - ode.values[i]));
    }
    return report;
}

}  // namespace ringwalk::oracle
