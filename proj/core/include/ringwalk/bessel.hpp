#pragma once

namespace ringwalk {

/// Bessel function of the first kind J_n(x) for integer n and x >= 0.
/// Power series below x = 8, normalized downward recurrence above.
/// Relative accuracy ~1e-13 for values that are not denormal-small.
double bessel_j(int order, double x);

/// Exponentially scaled modified Bessel function e^{-x} I_n(x) for integer
/// n and x >= 0. Never overflows; same accuracy as bessel_j.
double bessel_i_scaled(int order, double x);

}  // namespace ringwalk
