#include "ringwalk/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ringwalk {
namespace {

constexpr double kImagResidueLimit = 1e-12;
constexpr double kProbabilitySlack = 1e-12;

// Unit phasors e^{-2 pi i r / N}; phase factors e^{-i d theta_n} are exact
// table lookups at index (n*d) mod N, which keeps every series that shares
// a lattice on one code path.
std::vector<Complex> phase_table(int n) {
    std::vector<Complex> table(n);
    for (int r = 0; r < n; ++r) {
        const double angle = -2.0 * std::numbers::pi * r / n;
        table[r] = Complex(std::cos(angle), std::sin(angle));
    }
    return table;
}

int wrap_distance(const LatticeSpec& lattice, int source, int target) {
    lattice.require_node(source, "source");
    lattice.require_node(target, "target");
    const int n = lattice.size();
    int d = (target - source) % n;
    if (d < 0) d += n;
    return d;
}

double checked_probability(double value, const char* what) {
    if (value < -kProbabilitySlack || value > 1.0 + kProbabilitySlack) {
        std::ostringstream os;
        os << what << " probability " << value << " outside [0,1] beyond roundoff slack";
        throw NumericError(os.str());
    }
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

}  // namespace

const char* to_string(WalkKind kind) {
    return kind == WalkKind::classical ? "classical" : "quantum";
}

WalkKind walk_kind_from_string(const std::string& name) {
    if (name == "classical") return WalkKind::classical;
    if (name == "quantum") return WalkKind::quantum;
    throw ConstraintError("unknown walk kind '" + name + "' (expected classical|quantum)");
}

TimeGrid TimeGrid::linear(double t_min, double t_max, int count) {
    if (count < 1) throw ConstraintError("time grid needs at least one point");
    if (t_min < 0.0) throw ConstraintError("time grid starts below zero");
    if (count > 1 && t_max <= t_min) throw ConstraintError("time grid requires t_max > t_min");
    std::vector<double> pts(count);
    for (int i = 0; i < count; ++i) {
        pts[i] = count == 1 ? t_min : t_min + (t_max - t_min) * i / (count - 1);
    }
    return from_points(std::move(pts), GridSpacing::linear);
}

TimeGrid TimeGrid::logarithmic(double t_min, double t_max, int count) {
    if (count < 1) throw ConstraintError("time grid needs at least one point");
    if (t_min <= 0.0) throw ConstraintError("logarithmic time grid requires t_min > 0");
    if (count > 1 && t_max <= t_min) throw ConstraintError("time grid requires t_max > t_min");
    const double lo = std::log(t_min);
    const double hi = std::log(t_max);
    std::vector<double> pts(count);
    for (int i = 0; i < count; ++i) {
        pts[i] = count == 1 ? t_min : std::exp(lo + (hi - lo) * i / (count - 1));
    }
    return from_points(std::move(pts), GridSpacing::logarithmic);
}

TimeGrid TimeGrid::from_points(std::vector<double> points, GridSpacing spacing) {
    if (points.empty()) throw ConstraintError("time grid is empty");
    if (points.front() < 0.0) throw ConstraintError("time grid starts below zero");
    if (spacing == GridSpacing::logarithmic && points.front() <= 0.0) {
        throw ConstraintError("logarithmic time grid requires t > 0");
    }
    for (size_t i = 1; i < points.size(); ++i) {
        if (points[i] <= points[i - 1]) {
            throw ConstraintError("time grid must be strictly increasing");
        }
    }
    return TimeGrid{std::move(points), spacing};
}

AmplitudeSeries quantum_amplitude(const LatticeSpec& lattice, int source, int target,
                                  const TimeGrid& grid) {
    const int n = lattice.size();
    const int d = wrap_distance(lattice, source, target);
    const Spectrum spec = bloch_eigenvalues(lattice);
    const auto table = phase_table(n);

    AmplitudeSeries out{lattice, source, target, grid, {}};
    out.values.reserve(grid.size());
    for (double t : grid.points) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < n; ++k) {
            const double phase = -t * spec.eigenvalues[k];
            const Complex evolution(std::cos(phase), std::sin(phase));
            acc += evolution * table[static_cast<size_t>(k) * d % n];
        }
        out.values.push_back(acc / static_cast<double>(n));
    }
    return out;
}

ProbabilitySeries quantum_probability(const LatticeSpec& lattice, int source, int target,
                                      const TimeGrid& grid) {
    const AmplitudeSeries amp = quantum_amplitude(lattice, source, target, grid);
    ProbabilitySeries out{lattice, WalkKind::quantum, source, target, grid, {}};
    out.values.reserve(amp.values.size());
    for (const Complex& a : amp.values) {
        out.values.push_back(checked_probability(std::norm(a), "quantum"));
    }
    return out;
}

ProbabilitySeries classical_probability(const LatticeSpec& lattice, int source, int target,
                                        const TimeGrid& grid) {
    const int n = lattice.size();
    const int d = wrap_distance(lattice, source, target);
    const Spectrum spec = bloch_eigenvalues(lattice);
    const auto table = phase_table(n);

    ProbabilitySeries out{lattice, WalkKind::classical, source, target, grid, {}};
    out.values.reserve(grid.size());
    for (double t : grid.points) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < n; ++k) {
            acc += std::exp(-t * spec.eigenvalues[k]) * table[static_cast<size_t>(k) * d % n];
        }
        acc /= static_cast<double>(n);
        if (std::abs(acc.imag()) > kImagResidueLimit) {
            std::ostringstream os;
            os << "classical sum has imaginary residue " << acc.imag() << " at t = " << t;
            throw NumericError(os.str());
        }
        out.values.push_back(checked_probability(acc.real(), "classical"));
    }
    return out;
}

SnapshotMatrix distribution_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                                     const TimeGrid& grid) {
    const int n = lattice.size();
    lattice.require_node(source, "source");
    const Spectrum spec = bloch_eigenvalues(lattice);
    const auto table = phase_table(n);

    SnapshotMatrix out{lattice, kind, source, grid, {}};
    out.values.resize(grid.size() * static_cast<size_t>(n));

    std::vector<Complex> evolution(n);
    for (size_t ti = 0; ti < grid.size(); ++ti) {
        const double t = grid.points[ti];
        if (kind == WalkKind::quantum) {
            for (int k = 0; k < n; ++k) {
                const double phase = -t * spec.eigenvalues[k];
                evolution[k] = Complex(std::cos(phase), std::sin(phase));
            }
        } else {
            for (int k = 0; k < n; ++k) {
                evolution[k] = Complex(std::exp(-t * spec.eigenvalues[k]), 0.0);
            }
        }
        for (int d = 0; d < n; ++d) {
            Complex acc(0.0, 0.0);
            for (int k = 0; k < n; ++k) {
                acc += evolution[k] * table[static_cast<size_t>(k) * d % n];
            }
            acc /= static_cast<double>(n);
            double value;
            if (kind == WalkKind::quantum) {
                value = std::norm(acc);
            } else {
                if (std::abs(acc.imag()) > kImagResidueLimit) {
                    throw NumericError("classical snapshot row has imaginary residue");
                }
                value = acc.real();
            }
            out.values[ti * n + (source + d) % n] = checked_probability(value, "snapshot");
        }
    }
    return out;
}

double resolved_time_step(int connectivity) {
    return 0.1 / (4.0 * connectivity);
}

}  // namespace ringwalk
