#include <filesystem>

#include "ringwalk/limiting.hpp"
#include "commands.hpp"
#include "options.hpp"
#include "report.hpp"

namespace ringwalk::cli {
namespace {

using Options = std::map<std::string, std::string>;

std::string join(const std::filesystem::path& dir, const std::string& name,
                 const std::string& format) {
    const std::string ext = format == "json" ? ".json" : ".csv";
    return (dir / (name + ext)).string();
}

void emit(const std::string& subcommand, Options options, const std::string& path,
          const std::string& format) {
    options["out"] = path;
    options["format"] = format;
    run(materialize(subcommand, options));
}

// return probabilities: finite classical, finite quantum, infinite quantum
void fig1(const std::filesystem::path& dir, const std::string& format) {
    for (int m : {1, 2, 3}) {
        const std::string suffix = "m" + format_int(m);
        emit("evolve",
             {{"n", "100"}, {"m", format_int(m)}, {"kind", "classical"},
              {"source", "0"}, {"target", "0"}},
             join(dir, "fig1_classical_" + suffix, format), format);
        emit("evolve",
             {{"n", "100"}, {"m", format_int(m)}, {"kind", "quantum"},
              {"source", "0"}, {"target", "0"}},
             join(dir, "fig1_quantum_finite_" + suffix, format), format);
        emit("infinite",
             {{"m", format_int(m)}, {"distance", "0"}, {"kind", "quantum"}},
             join(dir, "fig1_quantum_infinite_" + suffix, format), format);
    }
}

// transition to the opposite node of N = 100 (distance 50)
void fig2(const std::filesystem::path& dir, const std::string& format) {
    for (int m : {1, 2, 3}) {
        const std::string suffix = "m" + format_int(m);
        emit("evolve",
             {{"n", "100"}, {"m", format_int(m)}, {"kind", "classical"},
              {"source", "0"}, {"target", "50"}, {"t_max", "1000"}},
             join(dir, "fig2_classical_finite_" + suffix, format), format);
        emit("infinite",
             {{"m", format_int(m)}, {"distance", "50"}, {"kind", "classical"},
              {"t_max", "1000"}},
             join(dir, "fig2_classical_infinite_" + suffix, format), format);
        emit("evolve",
             {{"n", "100"}, {"m", format_int(m)}, {"kind", "quantum"},
              {"source", "0"}, {"target", "50"}},
             join(dir, "fig2_quantum_finite_" + suffix, format), format);
        emit("infinite",
             {{"m", format_int(m)}, {"distance", "50"}, {"kind", "quantum"}},
             join(dir, "fig2_quantum_infinite_" + suffix, format), format);
    }
}

// equal shortest path length L = 10: (m, d) = (1,10), (2,20), (3,30)
void fig4(const std::filesystem::path& dir, const std::string& format) {
    for (int m : {1, 2, 3}) {
        const std::string d = format_int(10 * m);
        const std::string name = "m" + format_int(m) + "_d" + d;
        emit("infinite",
             {{"m", format_int(m)}, {"distance", d}, {"kind", "classical"},
              {"t_min", "0"}, {"t_max", "150"}, {"t_count", "601"},
              {"t_spacing", "linear"}},
             join(dir, "fig4_classical_" + name, format), format);
        emit("infinite",
             {{"m", format_int(m)}, {"distance", d}, {"kind", "quantum"},
              {"t_min", "0"}, {"t_max", "12"}, {"t_count", "601"},
              {"t_spacing", "linear"}},
             join(dir, "fig4_quantum_" + name, format), format);
    }
}

// character time vs shortest path length, with the fitted law
void fig5(const std::filesystem::path& dir, const std::string& format) {
    for (const std::string kind : {"classical", "quantum"}) {
        for (int m : {1, 2, 3}) {
            const std::string name = "fig5_" + kind + "_m" + format_int(m);
            emit("transport",
                 {{"kind", kind}, {"m", format_int(m)},
                  {"fit_out", join(dir, name + "_fit", format)}},
                 join(dir, name, format), format);
        }
    }
}

// limiting distributions at N = 100; m = 6 repeats the m = 1 pattern and
// m = 8 the m = 3 pattern, m = 12 has the extreme anchor values
void fig6(const std::filesystem::path& dir, const std::string& format) {
    for (int m : {1, 3, 6, 8, 12}) {
        emit("limiting", {{"n", "100"}, {"m", format_int(m)}, {"source", "0"}},
             join(dir, "fig6_m" + format_int(m), format), format);
    }
}

void fig8(const std::filesystem::path& dir, const std::string& format) {
    emit("asymmetry", {{"n", "100"}, {"m_range", "1:49"}},
         join(dir, "fig8a_scan", format), format);
    for (int m : {2, 3, 4}) {
        RunConfig config;
        config.subcommand = "figure";
        config.options = {{"name", "fig8b"}, {"m", format_int(m)},
                          {"n_range", "20:200"}, {"format", format}};
        Table table{{"N", "delta"}, {}};
        for (int n = 20; n <= 200; n += 2) {
            table.add_row({static_cast<long long>(n),
                           asymmetry_delta(LatticeSpec::ring(n, m))});
        }
        write_table(join(dir, "fig8b_m" + format_int(m), format), config, table,
                    output_format_from_string(format));
    }
}

}  // namespace

void run_figure(const RunConfig& config) {
    const std::string& name = config.get_string("name");
    const std::filesystem::path dir(config.get_string("out_dir"));
    const std::string& format = config.get_string("format");
    output_format_from_string(format);  // validate early
    std::filesystem::create_directories(dir);

    if (name == "fig1") {
        fig1(dir, format);
    } else if (name == "fig2") {
        fig2(dir, format);
    } else if (name == "fig4") {
        fig4(dir, format);
    } else if (name == "fig5") {
        fig5(dir, format);
    } else if (name == "fig6") {
        fig6(dir, format);
    } else if (name == "fig8") {
        fig8(dir, format);
    } else {
        throw ConstraintError("unknown figure '" + name +
                              "' (expected fig1|fig2|fig4|fig5|fig6|fig8)");
    }
}

}  // namespace ringwalk::cli
