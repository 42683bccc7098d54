#pragma once

#include <string>
#include <vector>

namespace ringwalk::cli {

struct OptionSpec {
    std::string key;       // RunConfig key; the CLI flag is --key with '_' -> '-'
    std::string help;
    std::string fallback;  // default value; required when empty and `required`
    bool required = false;
    bool is_flag = false;  // boolean switch
    bool positional = false;
};

struct SubcommandSpec {
    std::string name;
    std::string help;
    std::vector<OptionSpec> options;
};

const std::vector<SubcommandSpec>& subcommand_specs();
const SubcommandSpec& spec_for(const std::string& subcommand);

}  // namespace ringwalk::cli
