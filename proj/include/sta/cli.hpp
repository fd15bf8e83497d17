#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sta/experiment.hpp"

namespace sta {

/// Bad flags, values or combinations; the driver reports usage and exits
/// with a nonzero status.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliRequest {
    bool show_help = false;

    std::vector<ExperimentConfig> experiments;

    // surface-export mode (--grid)
    bool grid_mode = false;
    std::string grid_fn = "sphere";
    std::size_t grid_resolution = 0;
    std::string grid_out;   // empty = stdout
};

std::string usage_text();

/// Parses program arguments (without argv[0]). Unset options fall back to
/// the standard defaults for the chosen algorithm. Throws UsageError.
CliRequest parse_cli(const std::vector<std::string>& args);

/// One experiment per non-comment line, "key=value" tokens with the same
/// keys as the long flags. Throws UsageError with the offending line number.
std::vector<ExperimentConfig> load_suite(const std::string& path);

/// Full driver: parse, run, report. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sta
