#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kerrsim/config.hpp"

namespace kerrsim {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  ///< verification breach or no revival found
    kExitInvalidConfig = 2,
    kExitTruncation = 3,
};

/// Absolute analytic-vs-numeric tolerance for `verify`.
inline constexpr double kVerifyTolerance = 1e-9;

/// `series`: write one CSV/JSON time series per requested run.
int cmd_series(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `verify`: compare numeric and closed-form means over the grid.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `detect`: numeric series plus revival report, as JSON.
int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (without the program name). Flags win over values
/// read from --config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kerrsim
