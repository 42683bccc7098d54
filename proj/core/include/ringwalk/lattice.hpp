#pragma once

#include <string>
#include <vector>

#include "ringwalk/errors.hpp"

namespace ringwalk {

/// A 1D ring lattice of N nodes where each node couples to its m nearest
/// neighbours on either side (2m links per node), or the infinite-lattice
/// limit of the same family. The hopping rate is fixed at 1; rescaling time
/// covers every other choice.
class LatticeSpec {
public:
    /// Finite ring with N nodes, m neighbours per side.
    /// Requires N >= 3 and 1 <= m <= floor((N-1)/2).
    static LatticeSpec ring(int node_count, int connectivity);

    /// Infinite lattice with m neighbours per side (m >= 1).
    static LatticeSpec infinite(int connectivity);

    bool is_finite() const { return size_ > 0; }
    bool is_infinite() const { return size_ == 0; }

    /// Node count N. Throws ConstraintError on the infinite lattice.
    int size() const;

    int connectivity() const { return connectivity_; }

    static constexpr double hopping_rate() { return 1.0; }

    /// True iff finite and N = 2m+1, i.e. every pair of nodes is linked.
    bool is_complete() const { return is_finite() && size_ == 2 * connectivity_ + 1; }

    /// Shortest ring distance between nodes a and b (hops of size 1).
    int ring_distance(int a, int b) const;

    /// Throws ConstraintError unless 0 <= node < N.
    void require_node(int node, const char* what) const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

private:
    LatticeSpec(int size, int connectivity) : size_(size), connectivity_(connectivity) {}

    int size_;  // 0 marks the infinite lattice
    int connectivity_;
};

/// Dense integer matrix, row-major. Only used for the Laplacian and the
/// brute-force paths that consume it.
struct IntMatrix {
    int n = 0;
    std::vector<int> a;

    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
};

/// Bloch spectrum of a finite ring lattice: eigenvalue E_n and phase
/// theta_n = 2*pi*n/N per mode. E_0 = 0 and E_n = E_{N-n} hold bit-exactly
/// by construction.
struct Spectrum {
    LatticeSpec lattice;
    std::vector<double> eigenvalues;
    std::vector<double> phases;

    double max_eigenvalue() const;
};

/// Partition of spectrum indices into classes of (numerically) equal
/// eigenvalues. Classes are ordered by ascending eigenvalue; indices inside
/// a class are ascending.
struct DegeneracyPartition {
    std::vector<std::vector<int>> classes;
    std::vector<double> class_values;    // representative eigenvalue per class
    std::vector<int> signature;          // sorted multiset of class sizes
    double tolerance = 0.0;
    // Inter-class gaps within 10x of the tolerance; empty means the
    // clustering is unambiguous.
    std::vector<std::string> near_gap_warnings;

    /// class index for a spectrum index n
    int class_of(int n) const;
};

/// Laplacian A of the finite lattice: A_ii = 2m, A_ij = -1 iff the ring
/// distance between i and j is in [1, m], zero otherwise.
IntMatrix build_laplacian(const LatticeSpec& lattice);

/// Eigenvalues E_n = 2m - 2*sum_{j=1..m} cos(j*theta_n), theta_n = 2*pi*n/N.
Spectrum bloch_eigenvalues(const LatticeSpec& lattice);

/// Group eigenvalues into equality classes. Two values are co-classed iff
/// they differ by at most 1e-9 * max(1, 2m); mirror pairs (n, N-n) always
/// share a class because their values are bit-identical.
DegeneracyPartition degeneracy_partition(const Spectrum& spectrum);

/// True iff (N, m1) and (N, m2) induce the same index partition, as set
/// partitions of {0..N-1} (not merely the same size multiset).
bool pattern_equivalent(int node_count, int m1, int m2);

/// Tolerance used by degeneracy_partition for a given connectivity.
double degeneracy_tolerance(int connectivity);

}  // namespace ringwalk
