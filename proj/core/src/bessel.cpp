#include "ringwalk/bessel.hpp"

#include <cmath>
#include <cstdlib>

#include "ringwalk/errors.hpp"

namespace ringwalk {
namespace {

constexpr double kSeriesCutoff = 8.0;
constexpr double kRescaleLimit = 1e250;

// Ascending series sum_k s^k (x/2)^{n+2k} / (k! (n+k)!), s = -1 for J, +1
// for I. First term evaluated in log space so large n underflows gracefully
// instead of tripping intermediate overflow in n!.
double bessel_series(int n, double x, double sign) {
    const double half = 0.5 * x;
    const double log_t0 = n * std::log(half) - std::lgamma(n + 1.0);
    if (log_t0 < -745.0) return 0.0;
    double term = std::exp(log_t0);
    double sum = term;
    const double q = half * half;
    for (int k = 1; k <= 64; ++k) {
        term *= sign * q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum) + 1e-320) break;
    }
    return sum;
}

int miller_start_order(int n, double x) {
    const int base = std::max(n, static_cast<int>(std::ceil(x)));
    int start = base + 16 + static_cast<int>(std::ceil(std::sqrt(42.0 * base)));
    return start + (start & 1);  // even, so the seed order enters the J norm sum
}

// Downward three-term recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, seeded with
// a tiny value far above max(n, x) and normalized by
//   J_0 + 2 J_2 + 2 J_4 + ... = 1.
// Stable for every order; the seed margin sets the accuracy.
double bessel_j_miller(int n, double x) {
    const int start = miller_start_order(n, x);
    double upper = 0.0;       // J_{k+1}
    double cur = 1e-300;      // J_k, k = start
    double result = (n == start) ? cur : 0.0;
    double norm = 2.0 * cur;  // start is even and nonzero
    for (int k = start; k >= 1; --k) {
        const double lower = (2.0 * k / x) * cur - upper;  // J_{k-1}
        upper = cur;
        cur = lower;
        const int idx = k - 1;
        if (idx == n) result = cur;
        if (idx == 0) {
            norm += cur;
        } else if (idx % 2 == 0) {
            norm += 2.0 * cur;
        }
        if (std::abs(cur) > kRescaleLimit) {
            upper /= kRescaleLimit;
            cur /= kRescaleLimit;
            result /= kRescaleLimit;
            norm /= kRescaleLimit;
        }
    }
    return result / norm;
}

// Same scheme for I_n via I_{k-1} = (2k/x) I_k + I_{k+1}, normalized by
// e^{-x} (I_0 + 2 I_1 + 2 I_2 + ...) = 1, which yields the scaled function
// directly and never overflows.
double bessel_i_scaled_miller(int n, double x) {
    const int start = miller_start_order(n, x);
    double upper = 0.0;
    double cur = 1e-300;
    double result = (n == start) ? cur : 0.0;
    double norm = 2.0 * cur;
    for (int k = start; k >= 1; --k) {
        const double lower = (2.0 * k / x) * cur + upper;  // I_{k-1}
        upper = cur;
        cur = lower;
        const int idx = k - 1;
        if (idx == n) result = cur;
        norm += (idx == 0) ? cur : 2.0 * cur;
        if (cur > kRescaleLimit) {
            upper /= kRescaleLimit;
            cur /= kRescaleLimit;
            result /= kRescaleLimit;
            norm /= kRescaleLimit;
        }
    }
    return result / norm;
}

}  // namespace

double bessel_j(int order, double x) {
    if (x < 0.0) throw ConstraintError("bessel_j requires x >= 0");
    const int n = std::abs(order);
    const double parity = (order < 0 && (n & 1)) ? -1.0 : 1.0;  // J_{-n} = (-1)^n J_n
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kSeriesCutoff) return parity * bessel_series(n, x, -1.0);
    return parity * bessel_j_miller(n, x);
}

double bessel_i_scaled(int order, double x) {
    if (x < 0.0) throw ConstraintError("bessel_i_scaled requires x >= 0");
    const int n = std::abs(order);  // I_{-n} = I_n
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (x <= kSeriesCutoff) return std::exp(-x) * bessel_series(n, x, 1.0);
    return bessel_i_scaled_miller(n, x);
}

}  // namespace ringwalk
