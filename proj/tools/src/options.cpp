#include "options.hpp"

#include "ringwalk/errors.hpp"

namespace ringwalk::cli {
namespace {

OptionSpec opt(std::string key, std::string help, std::string fallback) {
    return {std::move(key), std::move(help), std::move(fallback), false, false, false};
}
OptionSpec req(std::string key, std::string help) {
    return {std::move(key), std::move(help), "", true, false, false};
}
OptionSpec flag(std::string key, std::string help) {
    return {std::move(key), std::move(help), "false", false, true, false};
}
OptionSpec pos(std::string key, std::string help) {
    return {std::move(key), std::move(help), "", true, false, true};
}

std::vector<OptionSpec> with_output(std::vector<OptionSpec> opts) {
    opts.push_back(req("out", "output file path"));
    opts.push_back(opt("format", "output format: csv|json", "csv"));
    return opts;
}

std::vector<SubcommandSpec> build_specs() {
    std::vector<SubcommandSpec> specs;

    specs.push_back({"spectrum",
                     "Bloch eigenvalues, phases and degeneracy classes of a ring lattice",
                     with_output({
                         req("n", "node count N"),
                         req("m", "neighbours per side"),
                     })});

    specs.push_back({"evolve",
                     "transition probability between two nodes over a time grid",
                     with_output({
                         req("n", "node count N"),
                         req("m", "neighbours per side"),
                         req("kind", "walk kind: classical|quantum"),
                         opt("source", "source node", "0"),
                         req("target", "target node"),
                         opt("t_min", "first grid time", "0.01"),
                         opt("t_max", "last grid time", "100"),
                         opt("t_count", "grid point count", "400"),
                         opt("t_spacing", "grid spacing: linear|log", "log"),
                         flag("one_based", "node labels are 1-based"),
                     })});

    specs.push_back({"snapshot",
                     "probability rows over every node, one row block per grid time",
                     with_output({
                         req("n", "node count N"),
                         req("m", "neighbours per side"),
                         req("kind", "walk kind: classical|quantum"),
                         opt("source", "source node", "0"),
                         opt("t_min", "first grid time", "0"),
                         opt("t_max", "last grid time", "50"),
                         opt("t_count", "grid point count", "201"),
                         opt("t_spacing", "grid spacing: linear|log", "linear"),
                         flag("one_based", "node labels are 1-based"),
                     })});

    specs.push_back({"infinite",
                     "infinite-lattice transition probability by quadrature",
                     with_output({
                         req("m", "neighbours per side"),
                         req("distance", "node distance k - j"),
                         req("kind", "walk kind: classical|quantum"),
                         opt("t_min", "first grid time", "0.01"),
                         opt("t_max", "last grid time", "100"),
                         opt("t_count", "grid point count", "400"),
                         opt("t_spacing", "grid spacing: linear|log", "log"),
                         opt("quad_error", "quadrature absolute error target", "1e-10"),
                         opt("quad_max_panels", "quadrature panel cap", "1048576"),
                         flag("check_wrap", "also report the matching no-wrap finite lattice"),
                     })});

    specs.push_back({"limiting",
                     "long-time averaged quantum distribution chi for one source",
                     with_output({
                         req("n", "node count N"),
                         req("m", "neighbours per side"),
                         opt("source", "source node", "0"),
                         flag("one_based", "node labels are 1-based"),
                     })});

    specs.push_back({"asymmetry",
                     "mirror-node asymmetry Delta over a range of m",
                     with_output({
                         req("n", "node count N (even)"),
                         req("m_range", "inclusive m range lo:hi"),
                         opt("offset", "even offset from the source node", "0"),
                         opt("source", "source node", "0"),
                         opt("delta_threshold", "|Delta| below this counts as zero", "1e-12"),
                         flag("one_based", "node labels are 1-based"),
                     })});

    specs.push_back({"transport",
                     "character times and transport-speed fits on the infinite lattice",
                     with_output({
                         req("kind", "walk kind: classical|quantum"),
                         req("m", "neighbours per side"),
                         opt("distances", "inclusive shortest-path range lo:hi", "5:30"),
                         opt("fit_out", "optional fit summary file", ""),
                         opt("quad_error", "quadrature absolute error target", "1e-10"),
                         opt("quad_max_panels", "quadrature panel cap", "1048576"),
                     })});

    specs.push_back({"scaling",
                     "log-log slope of a return/transition probability over a window",
                     with_output({
                         req("kind", "walk kind: classical|quantum"),
                         req("m", "neighbours per side"),
                         req("window", "time window lo:hi"),
                         opt("distance", "node distance (0 = return)", "0"),
                         opt("n", "node count (0 = infinite lattice)", "0"),
                         opt("envelope", "fit local maxima: auto|on|off", "auto"),
                         opt("series_out", "optional sampled series file", ""),
                         opt("quad_error", "quadrature absolute error target", "1e-10"),
                         opt("quad_max_panels", "quadrature panel cap", "1048576"),
                     })});

    specs.push_back({"verify",
                     "three-way agreement report: Bloch vs dense-eigen vs ODE",
                     with_output({
                         opt("n_max", "largest lattice to check", "16"),
                         opt("t_max", "time horizon", "10"),
                         opt("t_count", "grid point count", "11"),
                         opt("tolerance", "max-abs disagreement allowed", "1e-8"),
                     })});

    specs.push_back({"figure",
                     "emit the data series behind a named figure",
                     {
                         pos("name", "one of fig1|fig2|fig4|fig5|fig6|fig8"),
                         req("out_dir", "directory for the emitted files"),
                         opt("format", "output format: csv|json", "csv"),
                     }});

    return specs;
}

}  // namespace

const std::vector<SubcommandSpec>& subcommand_specs() {
    static const std::vector<SubcommandSpec> specs = build_specs();
    return specs;
}

const SubcommandSpec& spec_for(const std::string& subcommand) {
    for (const auto& spec : subcommand_specs()) {
        if (spec.name == subcommand) return spec;
    }
    throw ConstraintError("unknown subcommand '" + subcommand + "'");
}

}  // namespace ringwalk::cli
