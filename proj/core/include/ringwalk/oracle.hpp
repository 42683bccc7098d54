#pragma once

#include "ringwalk/dynamics.hpp"

namespace ringwalk::oracle {

/// Dense eigensystem of the Laplacian, from cyclic Jacobi rotations.
/// Eigenvalues ascend; eigenvector k is stored column-major at
/// [k*n, (k+1)*n).
struct DenseEigenSystem {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;

    double vec(int k, int i) const { return eigenvectors[static_cast<size_t>(k) * n + i]; }
};

DenseEigenSystem dense_eigensystem(const IntMatrix& matrix);

/// Probabilities via the dense eigenpairs,
///   classical: p_{k,j}(t) = sum_n e^{-t E_n} <k|q_n><q_n|j>
///   quantum:   pi_{k,j}(t) = |sum_n e^{-i t E_n} <k|q_n><q_n|j>|^2.
/// Never touches the analytic spectrum. N is capped at 512.
ProbabilitySeries oracle_probabilities(const LatticeSpec& lattice, int source, int target,
                                       WalkKind kind, const TimeGrid& grid);
SnapshotMatrix oracle_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                               const TimeGrid& grid);

/// Classic fourth-order Runge-Kutta on the master / Schroedinger equation
/// with the circulant matrix applied directly. The step obeys both the
/// stability rule h <= 0.05/(4m) and an accumulated-phase-error budget for
/// the full horizon. N is capped at 256. `max_step`, when positive, forces
/// a coarser bound and throws if it violates the stability rule.
ProbabilitySeries oracle_ode(const LatticeSpec& lattice, int source, int target,
                             WalkKind kind, const TimeGrid& grid, double max_step = 0.0);
SnapshotMatrix oracle_ode_snapshot(const LatticeSpec& lattice, int source, WalkKind kind,
                                   const TimeGrid& grid, double max_step = 0.0);

struct AgreementReport {
    double bloch_vs_dense = 0.0;
    double bloch_vs_ode = 0.0;
    double dense_vs_ode = 0.0;

    double worst() const;
};

/// Max-abs disagreement between the Bloch, dense-eigen and ODE paths over
/// every node and grid time.
AgreementReport three_way_agreement(const LatticeSpec& lattice, int source, WalkKind kind,
                                    const TimeGrid& grid);

}  // namespace ringwalk::oracle
