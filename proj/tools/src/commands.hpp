#pragma once

#include "runconfig.hpp"

namespace ringwalk::cli {

/// Fill every option the subcommand declares, preferring explicit entries,
/// then `file_config` entries, then declared defaults. Unknown keys in
/// either source and missing required options raise ConstraintError.
RunConfig materialize(const std::string& subcommand,
                      const std::map<std::string, std::string>& explicit_options,
                      const RunConfig* file_config = nullptr);

/// Execute one materialized configuration. Returns the process exit code
/// (0, or 1 for a failed verify run); usage and numeric problems surface as
/// ConstraintError / NumericError.
int run(const RunConfig& config);

/// Emit every data file behind a named figure into out_dir (figures.cpp).
void run_figure(const RunConfig& config);

}  // namespace ringwalk::cli
