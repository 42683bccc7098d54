#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ringwalk/infinite.hpp"
#include "ringwalk/limiting.hpp"

namespace ringwalk {

struct TimeBracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// One (L, t_c) measurement. lattice_size is empty on the infinite lattice.
struct TransportSample {
    int connectivity = 0;
    int path_length = 0;  // shortest path length L = ceil(|d| / m)
    double character_time = 0.0;
    WalkKind kind = WalkKind::classical;
    std::optional<int> lattice_size;

    double speed() const { return path_length / character_time; }
};

enum class FitModel { quadratic, linear_velocity, power_law };

struct FitResult {
    FitModel model = FitModel::quadratic;
    double beta = 0.0;       // quadratic: t_c = beta * L^2
    double velocity = 0.0;   // linear: t_c = intercept + L / velocity
    double intercept = 0.0;
    double exponent = 0.0;   // power law: y = prefactor * x^exponent
    double prefactor = 0.0;
    double r_squared = 0.0;
    double residual_max = 0.0;
};

/// Shortest path length between two nodes when one hop spans up to m ring
/// positions: ceil(ring_distance / m).
int shortest_path_length(const LatticeSpec& lattice, int a, int b);
int shortest_path_length_infinite(int connectivity, int distance);

/// Reasonable search window for the first probability maximum at node
/// distance d on the infinite lattice.
TimeBracket default_character_bracket(WalkKind kind, int connectivity, int distance);

/// Time of the first local maximum of the infinite-lattice transition
/// probability at node distance d. Quantum probabilities are scanned on the
/// resolved linear grid and refined parabolically to |dt| <= 1e-4; the
/// classical probability has a single maximum and is bracketed
/// geometrically before the same refinement. d = 0 starts at its maximum,
/// so the character time is 0.
double character_time(WalkKind kind, int connectivity, int distance, TimeBracket bracket,
                      const QuadratureConfig& config = {});

/// First probability maximum on a finite ring, same scan-and-refine scheme
/// as character_time. Used to confirm the character time does not depend on
/// the lattice size.
double character_time_finite(const LatticeSpec& lattice, WalkKind kind, int distance,
                             TimeBracket bracket);

/// Character times for L in `path_lengths` at node distance d = L*m (every
/// hop at full stride), on the infinite lattice.
std::vector<TransportSample> transport_samples(WalkKind kind, int connectivity,
                                               const std::vector<int>& path_lengths,
                                               const QuadratureConfig& config = {});

/// Least-squares beta for the one-parameter model t_c = beta L^2.
FitResult fit_quadratic(const std::vector<TransportSample>& samples);

/// Ordinary least squares of t_c against L; the velocity is the inverse
/// slope, the intercept absorbs the wavefront build-up offset.
FitResult fit_linear_velocity(const std::vector<TransportSample>& samples);

/// Log-log slope of a positive series over a time window. With
/// `use_envelope`, the local maxima are extracted first (oscillatory
/// quantum series).
FitResult scaling_exponent(const std::vector<std::pair<double, double>>& series,
                           double window_lo, double window_hi, bool use_envelope);

struct DeltaScalingResult {
    FitResult fit;
    std::vector<std::pair<int, double>> cluster;  // points the fit used
    std::vector<std::pair<int, double>> nonzero;  // all points with Delta != 0
};

/// Fits |Delta(N)| ~ N^exponent over even lattice sizes for one m. Points
/// are grouped by the sign of Delta and trimmed to a residual band around
/// an iteratively refit power law; the most populous cluster is fitted.
DeltaScalingResult delta_scaling(int connectivity, const std::vector<int>& node_counts,
                                 double residual_band = 0.35);

/// Earliest time at which a finite classical walk is equipartitioned:
/// |p_{j,j}(t) - 1/N| <= 0.01/N (the return node deviates the most).
double finite_equipartition_time(const LatticeSpec& lattice);

}  // namespace ringwalk
