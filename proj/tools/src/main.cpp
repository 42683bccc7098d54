#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringwalk/errors.hpp"
#include "ringwalk/version.hpp"
#include "commands.hpp"
#include "options.hpp"

namespace {

using ringwalk::cli::OptionSpec;
using ringwalk::cli::RunConfig;
using ringwalk::cli::SubcommandSpec;

std::string flag_name(const std::string& key) {
    std::string name = "--" + key;
    for (char& c : name) {
        if (c == '_') c = '-';
    }
    return name;
}

struct PendingRun {
    std::string subcommand;
    std::map<std::string, std::string> values;  // options given on the command line
    std::string config_path;
};

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ringwalk::ConstraintError("cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return RunConfig::parse_text(buffer.str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral simulator for continuous-time quantum and classical walks "
                 "on ring lattices"};
    app.set_version_flag("--version", std::string("ringwalk ") + ringwalk::kVersion);
    app.require_subcommand(0, 1);

    auto pending = std::make_shared<PendingRun>();
    for (const SubcommandSpec& spec : ringwalk::cli::subcommand_specs()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        for (const OptionSpec& option : spec.options) {
            const std::string key = option.key;
            auto sink = [pending, key](const std::string& value) {
                pending->values[key] = value;
            };
            if (option.is_flag) {
                sub->add_flag_callback(
                    flag_name(key), [pending, key] { pending->values[key] = "true"; },
                    option.help);
            } else if (option.positional) {
                sub->add_option_function<std::string>(key, sink, option.help);
            } else {
                sub->add_option_function<std::string>(flag_name(key), sink, option.help);
            }
        }
        sub->add_option_function<std::string>(
            "--config",
            [pending](const std::string& value) { pending->config_path = value; },
            "key = value file supplying defaults; flags take precedence");
        sub->callback([pending, name = spec.name] { pending->subcommand = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (pending->subcommand.empty()) {
        std::cerr << app.help();
        return 2;
    }

    try {
        RunConfig file_config;
        const bool has_file = !pending->config_path.empty();
        if (has_file) file_config = load_config_file(pending->config_path);
        const RunConfig config = ringwalk::cli::materialize(
            pending->subcommand, pending->values, has_file ? &file_config : nullptr);
        return ringwalk::cli::run(config);
    } catch (const ringwalk::ConstraintError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ringwalk::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
