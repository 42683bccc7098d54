#pragma once

#include <complex>
#include <vector>

#include "ringwalk/lattice.hpp"

namespace ringwalk {

using Complex = std::complex<double>;

enum class WalkKind { classical, quantum };

const char* to_string(WalkKind kind);
WalkKind walk_kind_from_string(const std::string& name);

enum class GridSpacing { linear, logarithmic };

/// Strictly increasing sample times, in units of the inverse hopping rate.
struct TimeGrid {
    std::vector<double> points;
    GridSpacing spacing = GridSpacing::linear;

    static TimeGrid linear(double t_min, double t_max, int count);
    /// Log-spaced grid; requires t_min > 0.
    static TimeGrid logarithmic(double t_min, double t_max, int count);
    static TimeGrid from_points(std::vector<double> points,
                                GridSpacing spacing = GridSpacing::linear);

    size_t size() const { return points.size(); }
};

/// Transition amplitude <k| e^{-itH} |j> sampled on a grid.
struct AmplitudeSeries {
    LatticeSpec lattice;
    int source = 0;
    int target = 0;
    TimeGrid grid;
    std::vector<Complex> values;
};

/// Transition probability between a fixed pair of nodes sampled on a grid.
struct ProbabilitySeries {
    LatticeSpec lattice;
    WalkKind kind = WalkKind::classical;
    int source = 0;
    int target = 0;
    TimeGrid grid;
    std::vector<double> values;
};

/// Probabilities from one source to every node, one row per grid point.
struct SnapshotMatrix {
    LatticeSpec lattice;
    WalkKind kind = WalkKind::classical;
    int source = 0;
    TimeGrid grid;
    std::vector<double> values;  // row-major, grid.size() x N

    double at(size_t time_index, int node) const {
        return values[time_index * lattice.size() + node];
    }
};

/// Bloch-sum amplitude alpha_{k,j}(t) = (1/N) sum_n e^{-i t E_n} e^{-i d theta_n}
/// with d = (k - j) mod N. One O(N) sum per grid point.
AmplitudeSeries quantum_amplitude(const LatticeSpec& lattice, int source, int target,
                                  const TimeGrid& grid);

/// |alpha_{k,j}(t)|^2 pointwise.
ProbabilitySeries quantum_probability(const LatticeSpec& lattice, int source, int target,
                                      const TimeGrid& grid);

/// p_{k,j}(t) = (1/N) sum_n e^{-t E_n} e^{-i d theta_n}. The sum is
/// mathematically real; the imaginary residue is checked against 1e-12 and
/// dropped.
ProbabilitySeries classical_probability(const LatticeSpec& lattice, int source, int target,
                                        const TimeGrid& grid);

/// Full distribution rows for every grid point (the data behind probability
/// "carpet" plots).
SnapshotMatrix distribution_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                                     const TimeGrid& grid);

/// Step bound for linear extremum-detection grids: resolves the fastest
/// phase, max_n E_n * dt <= 0.1, using the spectral bound E_max <= 4m.
double resolved_time_step(int connectivity);

}  // namespace ringwalk
