#pragma once

#include "ringwalk/dynamics.hpp"

namespace ringwalk {

struct QuadratureConfig {
    double target_abs_error = 1e-10;
    long max_panels = 1L << 20;

    void validate() const;
};

/// Classical transition probability on the infinite lattice at signed node
/// distance d (only |d| matters):
///   p(d, t) = (1/pi) * integral_0^pi cos(d theta) exp(-2t sum_j (1 - cos(j theta))) dtheta
/// Composite Gauss-Legendre with the panel count doubled until two
/// successive estimates agree to the target error.
double infinite_classical(int connectivity, int distance, double t,
                          const QuadratureConfig& config = {});

/// Quantum transition probability on the infinite lattice,
///   pi(d, t) = |(1/pi) * integral_0^pi cos(d theta) e^{2it sum_j cos(j theta)} dtheta|^2.
double infinite_quantum(int connectivity, int distance, double t,
                        const QuadratureConfig& config = {});

/// m = 1 closed forms: classical e^{-2t} I_d(2t), quantum [J_d(2t)]^2.
/// Evaluated from the in-repo Bessel routines, independent of the
/// quadrature path.
double bessel_m1(WalkKind kind, int distance, double t);

struct NoWrapReport {
    double infinite_value = 0.0;
    double finite_value = 0.0;
    int lattice_size = 0;
    double discrepancy = 0.0;
};

/// Compares the infinite-lattice value against a finite ring large enough
/// that the probability front cannot wrap within time t. The ring size is
/// 2*ceil(m(m+1)t + |d|) + 16, from the group-velocity bound
/// max|dE/dtheta| <= m(m+1).
NoWrapReport no_wrap_check(WalkKind kind, int connectivity, int distance, double t,
                           const QuadratureConfig& config = {});

/// Ring size used by no_wrap_check.
int no_wrap_lattice_size(int connectivity, int distance, double t);

}  // namespace ringwalk
