#pragma once

#include <vector>

#include "ringwalk/lattice.hpp"

namespace ringwalk {

// |Delta| at or below this counts as a symmetric pattern. The
// class-factorized chi is exact up to roundoff ~1e-15*N; genuine
// asymmetries are O(1/N), far above it.
inline constexpr double kDeltaZeroThreshold = 1e-12;

/// Long-time average chi_{k,j} of the quantum transition probability, for
/// every target k given one source j.
struct LimitingDistribution {
    LatticeSpec lattice;
    int source = 0;
    std::vector<double> values;  // indexed by node k
    DegeneracyPartition partition;

    double at(int node) const { return values[node]; }
};

struct AsymmetryScan {
    int node_count = 0;
    std::vector<int> m_values;
    std::vector<double> deltas;
    std::vector<int> nonzero_m;  // m with |Delta| above the threshold
    double threshold = kDeltaZeroThreshold;
};

/// chi evaluated per degeneracy class C as
///   chi_{k,j} = (1/N^2) sum_C | sum_{n in C} e^{-i (k-j) theta_n} |^2,
/// real and non-negative by construction, O(N^2) total.
LimitingDistribution limiting_distribution(const LatticeSpec& lattice, int source);

/// m = 1 closed form: even N has chi = 2(N-1)/N^2 at the source and its
/// opposite node and (N-2)/N^2 elsewhere; odd N has (2N-1)/N^2 at the
/// source and (N-1)/N^2 elsewhere. Integer arithmetic, one rounding each.
LimitingDistribution closed_form_cycle(int node_count, int source = 0);

/// Complete graph N = 2m+1: chi = (N^2-2N+2)/N^2 at the source, 2/N^2
/// elsewhere. Throws for even N.
LimitingDistribution complete_graph_limit(int node_count, int source = 0);

/// Delta = (chi_j - chi_j') / (chi_j + chi_j') where j' = j + N/2 is the
/// mirror node. Requires even N.
double asymmetry_delta(const LatticeSpec& lattice, int source = 0);

/// Delta-style ratio between chi at j+offset and at j+N/2+offset.
/// The offset must be even.
double general_mirror_asymmetry(const LatticeSpec& lattice, int source, int offset);

/// Delta for every m in [m_lo, m_hi] on an even-N ring, plus the set of m
/// whose pattern is asymmetric.
AsymmetryScan asymmetry_scan(int node_count, int m_lo, int m_hi,
                             double threshold = kDeltaZeroThreshold);

}  // namespace ringwalk
