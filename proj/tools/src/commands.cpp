#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "ringwalk/oracle.hpp"
#include "ringwalk/transport.hpp"
#include "options.hpp"
#include "report.hpp"

namespace ringwalk::cli {
namespace {

// Probability series shared by the scaling command and the figure recipes:
// finite lattice when n > 0, otherwise the infinite lattice (closed form
// for m = 1, quadrature beyond).
std::vector<std::pair<double, double>> sample_probability(WalkKind kind, int m, int n, int d,
                                                          const TimeGrid& grid,
                                                          const QuadratureConfig& quad) {
    std::vector<std::pair<double, double>> series;
    series.reserve(grid.size());
    if (n > 0) {
        const LatticeSpec lattice = LatticeSpec::ring(n, m);
        const int target = ((d % n) + n) % n;
        const ProbabilitySeries values =
            kind == WalkKind::classical ? classical_probability(lattice, 0, target, grid)
                                        : quantum_probability(lattice, 0, target, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            series.emplace_back(grid.points[i], values.values[i]);
        }
        return series;
    }
    for (double t : grid.points) {
        double value;
        if (m == 1) {
            value = bessel_m1(kind, d, t);  // closed form; quadrature agrees with it
        } else {
            value = kind == WalkKind::classical ? infinite_classical(m, d, t, quad)
                                                : infinite_quantum(m, d, t, quad);
        }
        series.emplace_back(t, value);
    }
    return series;
}

OutputFormat format_of(const RunConfig& config) {
    return output_format_from_string(config.get_string("format"));
}

std::filesystem::path out_path(const RunConfig& config, const std::string& key = "out") {
    return std::filesystem::path(config.get_string(key));
}

TimeGrid grid_of(const RunConfig& config) {
    const std::string spacing = config.get_string("t_spacing");
    const double lo = config.get_double("t_min");
    const double hi = config.get_double("t_max");
    const int count = config.get_int("t_count");
    if (spacing == "linear") return TimeGrid::linear(lo, hi, count);
    if (spacing == "log") return TimeGrid::logarithmic(lo, hi, count);
    throw ConstraintError("t_spacing must be linear|log, got '" + spacing + "'");
}

QuadratureConfig quadrature_of(const RunConfig& config) {
    QuadratureConfig quad;
    quad.target_abs_error = config.get_double("quad_error");
    quad.max_panels = config.get_int("quad_max_panels");
    return quad;
}

// node labels cross the CLI boundary 1-based when one_based is set
int node_in(const RunConfig& config, const std::string& key) {
    const int raw = config.get_int(key);
    return config.has("one_based") && config.get_bool("one_based") ? raw - 1 : raw;
}

long long node_out(const RunConfig& config, int node) {
    return config.has("one_based") && config.get_bool("one_based") ? node + 1 : node;
}

void cmd_spectrum(const RunConfig& config) {
    const LatticeSpec lattice = LatticeSpec::ring(config.get_int("n"), config.get_int("m"));
    const Spectrum spectrum = bloch_eigenvalues(lattice);
    const DegeneracyPartition partition = degeneracy_partition(spectrum);
    for (const auto& warning : partition.near_gap_warnings) {
        std::cerr << "spectrum: " << warning << "\n";
    }
    std::vector<int> class_of(spectrum.eigenvalues.size());
    for (size_t c = 0; c < partition.classes.size(); ++c) {
        for (int idx : partition.classes[c]) class_of[idx] = static_cast<int>(c);
    }
    Table table{{"n", "theta", "E", "class_id"}, {}};
    for (size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
        table.add_row({static_cast<long long>(k), spectrum.phases[k],
                       spectrum.eigenvalues[k], static_cast<long long>(class_of[k])});
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_evolve(const RunConfig& config) {
    const LatticeSpec lattice = LatticeSpec::ring(config.get_int("n"), config.get_int("m"));
    const WalkKind kind = walk_kind_from_string(config.get_string("kind"));
    const int source = node_in(config, "source");
    const int target = node_in(config, "target");
    const TimeGrid grid = grid_of(config);
    const ProbabilitySeries series =
        kind == WalkKind::classical ? classical_probability(lattice, source, target, grid)
                                    : quantum_probability(lattice, source, target, grid);
    Table table{{"t", "value"}, {}};
    for (size_t i = 0; i < grid.size(); ++i) {
        table.add_row({grid.points[i], series.values[i]});
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_snapshot(const RunConfig& config) {
    const LatticeSpec lattice = LatticeSpec::ring(config.get_int("n"), config.get_int("m"));
    const WalkKind kind = walk_kind_from_string(config.get_string("kind"));
    const int source = node_in(config, "source");
    const TimeGrid grid = grid_of(config);
    const SnapshotMatrix snap = distribution_snapshot(lattice, source, kind, grid);
    Table table{{"t", "k", "value"}, {}};
    for (size_t i = 0; i < grid.size(); ++i) {
        for (int k = 0; k < lattice.size(); ++k) {
            table.add_row({grid.points[i], node_out(config, k), snap.at(i, k)});
        }
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_infinite(const RunConfig& config) {
    const int m = config.get_int("m");
    const int d = config.get_int("distance");
    const WalkKind kind = walk_kind_from_string(config.get_string("kind"));
    const TimeGrid grid = grid_of(config);
    const QuadratureConfig quad = quadrature_of(config);

    if (config.get_bool("check_wrap")) {
        Table table{{"t", "infinite", "finite", "n_used", "discrepancy"}, {}};
        for (double t : grid.points) {
            const NoWrapReport report = no_wrap_check(kind, m, d, t, quad);
            table.add_row({t, report.infinite_value, report.finite_value,
                           static_cast<long long>(report.lattice_size), report.discrepancy});
        }
        write_table(out_path(config), config, table, format_of(config));
        return;
    }
    Table table{{"t", "value"}, {}};
    for (double t : grid.points) {
        const double value = kind == WalkKind::classical ? infinite_classical(m, d, t, quad)
                                                         : infinite_quantum(m, d, t, quad);
        table.add_row({t, value});
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_limiting(const RunConfig& config) {
    const LatticeSpec lattice = LatticeSpec::ring(config.get_int("n"), config.get_int("m"));
    const int source = node_in(config, "source");
    const LimitingDistribution chi = limiting_distribution(lattice, source);
    Table table{{"k", "chi"}, {}};
    for (int k = 0; k < lattice.size(); ++k) {
        table.add_row({node_out(config, k), chi.at(k)});
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_asymmetry(const RunConfig& config) {
    const int n = config.get_int("n");
    const auto [m_lo, m_hi] = config.get_range("m_range");
    const int offset = config.get_int("offset");
    const int source = node_in(config, "source");
    const double threshold = config.get_double("delta_threshold");
    Table table{{"m", "delta", "nonzero"}, {}};
    for (int m = m_lo; m <= m_hi; ++m) {
        const LatticeSpec lattice = LatticeSpec::ring(n, m);
        const double delta = general_mirror_asymmetry(lattice, source, offset);
        table.add_row({static_cast<long long>(m), delta,
                       static_cast<long long>(std::abs(delta) > threshold ? 1 : 0)});
    }
    write_table(out_path(config), config, table, format_of(config));
}

void cmd_transport(const RunConfig& config) {
    const WalkKind kind = walk_kind_from_string(config.get_string("kind"));
    const int m = config.get_int("m");
    const auto [lo, hi] = config.get_range("distances");
    std::vector<int> lengths;
    for (int length = lo; length <= hi; ++length) lengths.push_back(length);
    const auto samples = transport_samples(kind, m, lengths, quadrature_of(config));

    Table table{{"L", "t_c", "v"}, {}};
    for (const auto& s : samples) {
        table.add_row({static_cast<long long>(s.path_length), s.character_time, s.speed()});
    }
    write_table(out_path(config), config, table, format_of(config));

    const FitResult fit =
        kind == WalkKind::classical ? fit_quadratic(samples) : fit_linear_velocity(samples);
    Table summary{{"quantity", "value"}, {}};
    if (kind == WalkKind::classical) {
        summary.add_row({std::string("model"), std::string("quadratic")});
        summary.add_row({std::string("beta"), fit.beta});
    } else {
        summary.add_row({std::string("model"), std::string("linear")});
        summary.add_row({std::string("velocity"), fit.velocity});
        summary.add_row({std::string("intercept"), fit.intercept});
    }
    summary.add_row({std::string("r_squared"), fit.r_squared});
    summary.add_row({std::string("residual_max"), fit.residual_max});
    if (!config.get_string("fit_out").empty()) {
        write_table(out_path(config, "fit_out"), config, summary, format_of(config));
    }
    if (kind == WalkKind::classical) {
        std::cout << "quadratic fit: beta = " << format_double(fit.beta)
                  << ", R^2 = " << format_double(fit.r_squared) << "\n";
    } else {
        std::cout << "linear fit: v = " << format_double(fit.velocity)
                  << ", R^2 = " << format_double(fit.r_squared) << "\n";
    }
}

void cmd_scaling(const RunConfig& config) {
    const WalkKind kind = walk_kind_from_string(config.get_string("kind"));
    const int m = config.get_int("m");
    const int n = config.get_int("n");
    const int d = config.get_int("distance");
    const auto [win_lo, win_hi] = config.get_range("window");
    const QuadratureConfig quad = quadrature_of(config);

    const std::string envelope_mode = config.get_string("envelope");
    bool envelope;
    if (envelope_mode == "auto") {
        envelope = kind == WalkKind::quantum;
    } else if (envelope_mode == "on" || envelope_mode == "off") {
        envelope = envelope_mode == "on";
    } else {
        throw ConstraintError("envelope must be auto|on|off, got '" + envelope_mode + "'");
    }

    std::vector<std::pair<double, double>> series;
    if (envelope) {
        // resolve every oscillation so no local maximum is skipped
        const double step = resolved_time_step(m);
        const int count = static_cast<int>(std::ceil((win_hi - win_lo) / step)) + 1;
        const TimeGrid grid = TimeGrid::linear(win_lo, win_hi, count);
        series = sample_probability(kind, m, n, d, grid, quad);
    } else {
        const TimeGrid grid = TimeGrid::logarithmic(std::max(1e-6, double(win_lo)),
                                                    win_hi, 200);
        series = sample_probability(kind, m, n, d, grid, quad);
    }

    const FitResult fit = scaling_exponent(series, win_lo, win_hi, envelope);
    Table summary{{"quantity", "value"}, {}};
    summary.add_row({std::string("model"), std::string("power")});
    summary.add_row({std::string("exponent"), fit.exponent});
    summary.add_row({std::string("prefactor"), fit.prefactor});
    summary.add_row({std::string("r_squared"), fit.r_squared});
    summary.add_row({std::string("residual_max"), fit.residual_max});
    write_table(out_path(config), config, summary, format_of(config));

    if (!config.get_string("series_out").empty()) {
        Table data{{"t", "value"}, {}};
        for (const auto& p : series) data.add_row({p.first, p.second});
        write_table(out_path(config, "series_out"), config, data, format_of(config));
    }
    std::cout << "power fit: exponent = " << format_double(fit.exponent)
              << ", R^2 = " << format_double(fit.r_squared) << "\n";
}

int cmd_verify(const RunConfig& config) {
    const int n_max = config.get_int("n_max");
    const double tolerance = config.get_double("tolerance");
    const TimeGrid grid =
        TimeGrid::linear(0.0, config.get_double("t_max"), config.get_int("t_count"));
    Table table{{"n", "m", "kind", "bloch_vs_dense", "bloch_vs_ode", "dense_vs_ode"}, {}};
    double worst = 0.0;
    for (int n = 3; n <= n_max; ++n) {
        for (int m = 1; m <= (n - 1) / 2; ++m) {
            const LatticeSpec lattice = LatticeSpec::ring(n, m);
            for (WalkKind kind : {WalkKind::classical, WalkKind::quantum}) {
                const auto report = oracle::three_way_agreement(lattice, 0, kind, grid);
                table.add_row({static_cast<long long>(n), static_cast<long long>(m),
                               std::string(to_string(kind)), report.bloch_vs_dense,
                               report.bloch_vs_ode, report.dense_vs_ode});
                worst = std::max(worst, report.worst());
            }
        }
    }
    write_table(out_path(config), config, table, format_of(config));
    std::cout << "verify: worst max-abs disagreement " << format_double(worst) << "\n";
    if (worst > tolerance) {
        std::cerr << "verify: disagreement " << format_double(worst)
                  << " exceeds tolerance " << format_double(tolerance) << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

RunConfig materialize(const std::string& subcommand,
                      const std::map<std::string, std::string>& explicit_options,
                      const RunConfig* file_config) {
    const SubcommandSpec& spec = spec_for(subcommand);
    auto declared = [&](const std::string& key) {
        for (const auto& option : spec.options) {
            if (option.key == key) return true;
        }
        return false;
    };
    for (const auto& [key, value] : explicit_options) {
        if (!declared(key)) {
            throw ConstraintError("subcommand '" + subcommand + "' has no option '" + key + "'");
        }
    }
    if (file_config) {
        if (!file_config->subcommand.empty() && file_config->subcommand != subcommand) {
            throw ConstraintError("config file is for subcommand '" + file_config->subcommand +
                                  "', not '" + subcommand + "'");
        }
        for (const auto& [key, value] : file_config->options) {
            if (!declared(key)) {
                throw ConstraintError("config file key '" + key + "' is not an option of '" +
                                      subcommand + "'");
            }
        }
    }

    RunConfig config;
    config.subcommand = subcommand;
    for (const auto& option : spec.options) {
        if (const auto it = explicit_options.find(option.key); it != explicit_options.end()) {
            config.options[option.key] = it->second;
        } else if (file_config && file_config->has(option.key)) {
            config.options[option.key] = file_config->raw(option.key);
        } else if (!option.required) {
            config.options[option.key] = option.fallback;
        } else {
            throw ConstraintError("missing required option '--" + option.key + "' for '" +
                                  subcommand + "'");
        }
    }
    return config;
}

int run(const RunConfig& config) {
    if (config.subcommand == "spectrum") {
        cmd_spectrum(config);
    } else if (config.subcommand == "evolve") {
        cmd_evolve(config);
    } else if (config.subcommand == "snapshot") {
        cmd_snapshot(config);
    } else if (config.subcommand == "infinite") {
        cmd_infinite(config);
    } else if (config.subcommand == "limiting") {
        cmd_limiting(config);
    } else if (config.subcommand == "asymmetry") {
        cmd_asymmetry(config);
    } else if (config.subcommand == "transport") {
        cmd_transport(config);
    } else if (config.subcommand == "scaling") {
        cmd_scaling(config);
    } else if (config.subcommand == "verify") {
        return cmd_verify(config);
    } else if (config.subcommand == "figure") {
        run_figure(config);
    } else {
        throw ConstraintError("unknown subcommand '" + config.subcommand + "'");
    }
    return 0;
}

}  // namespace ringwalk::cli
