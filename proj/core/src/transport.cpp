#include "ringwalk/transport.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

namespace ringwalk {
namespace {

constexpr double kRefineTolerance = 1e-4;
constexpr double kPeakFloor = 1e-7;  // scan noise guard ahead of the wavefront

double probe(WalkKind kind, int m, int d, double t, const QuadratureConfig& config) {
    return kind == WalkKind::classical ? infinite_classical(m, d, t, config)
                                       : infinite_quantum(m, d, t, config);
}

// Successive parabolic interpolation on a bracket with f(mid) above both
// ends; golden-section step when the parabola degenerates.
double refine_maximum(const std::function<double(double)>& f, double lo, double mid,
                      double hi, double f_lo, double f_mid, double f_hi) {
    constexpr double kGolden = 0.381966011250105;
    for (int iter = 0; iter < 200 && hi - lo > kRefineTolerance; ++iter) {
        const double d1 = (mid - lo) * (f_mid - f_hi);
        const double d2 = (mid - hi) * (f_mid - f_lo);
        double t;
        const double denom = 2.0 * (d1 - d2);
        if (std::abs(denom) > 1e-300) {
            t = mid - ((mid - lo) * d1 - (mid - hi) * d2) / denom;
        } else {
            t = lo + kGolden * (hi - lo);
        }
        // keep the probe strictly interior and away from the current mid
        const double margin = 0.05 * (hi - lo);
        if (!(t > lo + 0.25 * margin && t < hi - 0.25 * margin) ||
            std::abs(t - mid) < 1e-14) {
            t = mid < 0.5 * (lo + hi) ? mid + kGolden * (hi - mid)
                                      : mid - kGolden * (mid - lo);
        }
        const double ft = f(t);
        if (ft >= f_mid) {
            if (t < mid) {
                hi = mid;
                f_hi = f_mid;
            } else {
                lo = mid;
                f_lo = f_mid;
            }
            mid = t;
            f_mid = ft;
        } else {
            if (t < mid) {
                lo = t;
                f_lo = ft;
            } else {
                hi = t;
                f_hi = ft;
            }
        }
    }
    return mid;
}

// Linear scan catching the first sample that beats both neighbours, then
// parabolic refinement. The floor keeps quadrature noise ahead of the
// wavefront from minting fake maxima.
double scan_first_maximum(const std::function<double(double)>& f, double lo, double hi,
                          double step, const char* what) {
    double t_prev2 = std::max(lo, 0.0);
    double t_prev = t_prev2 + step;
    double v_prev2 = f(t_prev2);
    double v_prev = f(t_prev);
    for (double t = t_prev + step; t <= hi + step; t += step) {
        const double v = f(t);
        if (v_prev > v_prev2 && v_prev >= v && v_prev > kPeakFloor) {
            return refine_maximum(f, t_prev2, t_prev, t, v_prev2, v_prev, v);
        }
        t_prev2 = t_prev;
        v_prev2 = v_prev;
        t_prev = t;
        v_prev = v;
    }
    std::ostringstream os;
    os << "no " << what << " maximum found scanning [" << lo << ", " << hi << "] at step "
       << step << "; last values " << v_prev2 << ", " << v_prev;
    throw NumericError(os.str());
}

FitResult finish_fit(FitResult fit, const std::vector<double>& x,
                     const std::vector<double>& y,
                     const std::function<double(double)>& predict) {
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_res = 0.0, ss_tot = 0.0, worst = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
        const double r = y[i] - predict(x[i]);
        ss_res += r * r;
        ss_tot += (y[i] - mean) * (y[i] - mean);
        worst = std::max(worst, std::abs(r));
    }
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    fit.residual_max = worst;
    return fit;
}

void require_fit_samples(const std::vector<TransportSample>& samples) {
    if (samples.size() < 3) {
        throw ConstraintError("fit needs at least 3 samples");
    }
    std::set<int> lengths;
    for (const auto& s : samples) lengths.insert(s.path_length);
    if (lengths.size() < 3) {
        throw ConstraintError("fit needs at least 3 distinct path lengths");
    }
}

// OLS slope/intercept of y on x.
std::pair<double, double> ols_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw ConstraintError("degenerate fit abscissae");
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return {slope, intercept};
}

}  // namespace

int shortest_path_length(const LatticeSpec& lattice, int a, int b) {
    const int ring = lattice.ring_distance(a, b);
    const int m = lattice.connectivity();
    return (ring + m - 1) / m;
}

int shortest_path_length_infinite(int connectivity, int distance) {
    const int d = std::abs(distance);
    return (d + connectivity - 1) / connectivity;
}

TimeBracket default_character_bracket(WalkKind kind, int connectivity, int distance) {
    const double d = std::abs(distance);
    const double m = connectivity;
    if (kind == WalkKind::quantum) {
        // front speed is below m(m+1) and above ~m, so the first peak sits
        // well inside [0, 2 d/m + 10]
        return {0.0, 2.0 * d / m + 10.0};
    }
    // diffusive peak near d^2 * 3 / (m(m+1)(2m+1)); the confirmation probe
    // needs a few multiples of it because the tail decays like t^{-1/2}
    const double guess = 3.0 * d * d / (m * (m + 1.0) * (2.0 * m + 1.0));
    return {0.0, 4.0 * guess + 30.0};
}

double character_time(WalkKind kind, int connectivity, int distance, TimeBracket bracket,
                      const QuadratureConfig& config) {
    const int m = connectivity;
    const int d = std::abs(distance);
    if (m < 1) throw ConstraintError("character time requires m >= 1");
    if (d == 0) return 0.0;  // return probability starts at its maximum
    if (!(bracket.hi > bracket.lo) || bracket.lo < 0.0) {
        throw ConstraintError("character time needs a bracket with 0 <= lo < hi");
    }
    auto f = [&](double t) { return probe(kind, m, d, t, config); };

    if (kind == WalkKind::quantum) {
        // linear scan on the resolved grid catches the first of the
        // interference maxima
        return scan_first_maximum(f, bracket.lo, bracket.hi, resolved_time_step(m),
                                  "quantum");
    }

    // classical: a single maximum; geometric expansion brackets it. Values
    // below the noise floor (quadrature roundoff before the front arrives)
    // neither set the running best nor end the scan.
    std::vector<double> ts{std::max(bracket.lo, 1e-3)};
    std::vector<double> vs{f(ts[0])};
    double best = 0.0;
    size_t best_idx = 0;
    while (true) {
        if (ts.back() >= bracket.hi) {
            std::ostringstream os;
            os << "no classical maximum inside the bracket for m=" << m << ", d=" << d
               << "; value " << vs.back() << " at t=" << ts.back()
               << " has not dropped below 0.85 of the peak";
            throw NumericError(os.str());
        }
        const double t = std::min(ts.back() * 1.5, bracket.hi);
        ts.push_back(t);
        vs.push_back(f(t));
        if (vs.back() > best && vs.back() > kPeakFloor) {
            best = vs.back();
            best_idx = ts.size() - 1;
        }
        if (best > kPeakFloor && best_idx + 1 < ts.size() && vs.back() < 0.85 * best) break;
    }
    if (best_idx == 0 || best_idx + 1 >= ts.size()) {
        throw NumericError("classical maximum was not interior to the scan");
    }
    return refine_maximum(f, ts[best_idx - 1], ts[best_idx], ts[best_idx + 1],
                          vs[best_idx - 1], vs[best_idx], vs[best_idx + 1]);
}

double character_time_finite(const LatticeSpec& lattice, WalkKind kind, int distance,
                             TimeBracket bracket) {
    const int n = lattice.size();
    const int target = ((distance % n) + n) % n;
    if (target == 0) return 0.0;
    if (!(bracket.hi > bracket.lo) || bracket.lo < 0.0) {
        throw ConstraintError("character time needs a bracket with 0 <= lo < hi");
    }
    auto f = [&](double t) {
        const TimeGrid point = TimeGrid::from_points({std::max(t, 0.0)});
        return kind == WalkKind::classical
                   ? classical_probability(lattice, 0, target, point).values.front()
                   : quantum_probability(lattice, 0, target, point).values.front();
    };
    return scan_first_maximum(f, bracket.lo, bracket.hi,
                              resolved_time_step(lattice.connectivity()), "finite-lattice");
}

std::vector<TransportSample> transport_samples(WalkKind kind, int connectivity,
                                               const std::vector<int>& path_lengths,
                                               const QuadratureConfig& config) {
    for (int length : path_lengths) {
        if (length < 1) throw ConstraintError("path length must be >= 1");
    }
    // per-distance searches are independent pure calls; results are
    // collected in input order, so the output is deterministic
    std::vector<std::future<double>> futures;
    futures.reserve(path_lengths.size());
    for (int length : path_lengths) {
        futures.push_back(std::async(std::launch::async, [=] {
            const int d = length * connectivity;
            const TimeBracket bracket = default_character_bracket(kind, connectivity, d);
            return character_time(kind, connectivity, d, bracket, config);
        }));
    }
    std::vector<TransportSample> out;
    out.reserve(path_lengths.size());
    for (size_t i = 0; i < path_lengths.size(); ++i) {
        TransportSample s;
        s.connectivity = connectivity;
        s.path_length = path_lengths[i];
        s.kind = kind;
        s.character_time = futures[i].get();
        out.push_back(s);
    }
    return out;
}

FitResult fit_quadratic(const std::vector<TransportSample>& samples) {
    require_fit_samples(samples);
    double num = 0.0, den = 0.0;
    std::vector<double> x, y;
    for (const auto& s : samples) {
        const double l2 = static_cast<double>(s.path_length) * s.path_length;
        num += l2 * s.character_time;
        den += l2 * l2;
        x.push_back(s.path_length);
        y.push_back(s.character_time);
    }
    FitResult fit;
    fit.model = FitModel::quadratic;
    fit.beta = num / den;
    return finish_fit(fit, x, y, [&](double l) { return fit.beta * l * l; });
}

FitResult fit_linear_velocity(const std::vector<TransportSample>& samples) {
    require_fit_samples(samples);
    std::vector<double> x, y;
    for (const auto& s : samples) {
        x.push_back(s.path_length);
        y.push_back(s.character_time);
    }
    const auto [slope, intercept] = ols_line(x, y);
    if (slope <= 0.0) throw NumericError("non-positive t_c slope; no velocity");
    FitResult fit;
    fit.model = FitModel::linear_velocity;
    fit.velocity = 1.0 / slope;
    fit.intercept = intercept;
    return finish_fit(fit, x, y, [&](double l) { return intercept + slope * l; });
}

FitResult scaling_exponent(const std::vector<std::pair<double, double>>& series,
                           double window_lo, double window_hi, bool use_envelope) {
    std::vector<std::pair<double, double>> window;
    for (const auto& p : series) {
        if (p.first >= window_lo && p.first <= window_hi) window.push_back(p);
    }
    std::vector<std::pair<double, double>> pts;
    if (use_envelope) {
        for (size_t i = 1; i + 1 < window.size(); ++i) {
            if (window[i].second > window[i - 1].second &&
                window[i].second >= window[i + 1].second) {
                pts.push_back(window[i]);
            }
        }
    } else {
        pts = window;
    }
    if (pts.size() < 3) throw ConstraintError("scaling window holds fewer than 3 points");
    std::vector<double> x, y;
    for (const auto& p : pts) {
        if (p.second <= 0.0) {
            std::ostringstream os;
            os << "non-positive value " << p.second << " at t = " << p.first
               << " in the scaling window";
            throw ConstraintError(os.str());
        }
        x.push_back(std::log(p.first));
        y.push_back(std::log(p.second));
    }
    const auto [slope, intercept] = ols_line(x, y);
    FitResult fit;
    fit.model = FitModel::power_law;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    return finish_fit(fit, x, y, [&](double lx) { return intercept + slope * lx; });
}

DeltaScalingResult delta_scaling(int connectivity, const std::vector<int>& node_counts,
                                 double residual_band) {
    DeltaScalingResult result;
    for (int n : node_counts) {
        if (n % 2 != 0) throw ConstraintError("delta scaling needs even lattice sizes");
        if (connectivity > (n - 1) / 2) continue;
        const double delta = asymmetry_delta(LatticeSpec::ring(n, connectivity));
        if (std::abs(delta) > kDeltaZeroThreshold) result.nonzero.emplace_back(n, delta);
    }
    if (result.nonzero.size() < 3) {
        std::ostringstream os;
        os << "delta scaling for m=" << connectivity << " found only "
           << result.nonzero.size() << " nonzero points (needs 3)";
        throw ConstraintError(os.str());
    }

    // sign groups, then residual-band trim around an iteratively refit line
    std::vector<std::vector<std::pair<int, double>>> groups(2);
    for (const auto& p : result.nonzero) groups[p.second > 0.0 ? 0 : 1].push_back(p);

    std::vector<std::pair<int, double>> best_cluster;
    for (auto cluster : groups) {
        for (int pass = 0; pass < 3 && cluster.size() >= 3; ++pass) {
            std::vector<double> x, y;
            for (const auto& p : cluster) {
                x.push_back(std::log(static_cast<double>(p.first)));
                y.push_back(std::log(std::abs(p.second)));
            }
            const auto [slope, intercept] = ols_line(x, y);
            std::vector<std::pair<int, double>> kept;
            for (size_t i = 0; i < cluster.size(); ++i) {
                if (std::abs(y[i] - (intercept + slope * x[i])) <= residual_band) {
                    kept.push_back(cluster[i]);
                }
            }
            if (kept.size() == cluster.size()) break;
            cluster = std::move(kept);
        }
        if (cluster.size() > best_cluster.size()) best_cluster = cluster;
    }
    if (best_cluster.size() < 3) {
        throw NumericError("no delta cluster with at least 3 points survived trimming");
    }

    std::vector<std::pair<double, double>> series;
    for (const auto& p : best_cluster) {
        series.emplace_back(static_cast<double>(p.first), std::abs(p.second));
    }
    result.fit = scaling_exponent(series, series.front().first, series.back().first, false);
    result.cluster = std::move(best_cluster);
    return result;
}

double finite_equipartition_time(const LatticeSpec& lattice) {
    const int n = lattice.size();
    const Spectrum spec = bloch_eigenvalues(lattice);
    const double target = 0.01 / n;
    // return-node deviation (1/N) sum_{k != 0} e^{-t E_k} bounds every other
    // node's deviation and decreases monotonically: bisect the crossing
    auto deviation = [&](double t) {
        double acc = 0.0;
        for (int k = 1; k < n; ++k) acc += std::exp(-t * spec.eigenvalues[k]);
        return acc / n;
    };
    double hi = 1.0;
    while (deviation(hi) > target) {
        hi *= 2.0;
        if (hi > 1e9) throw NumericError("equipartition not reached below t = 1e9");
    }
    double lo = 0.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-6 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (deviation(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace ringwalk
