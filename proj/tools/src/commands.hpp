#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace bks::app {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitValidation = 2,
    kExitCheckFailed = 3,
    kExitResourceCap = 4,
};

/// Either explicit root coordinates ("1/4,1/2") or fundamental-weight
/// coordinates of lambda = k beta ("1,2").
struct PointSpec {
    std::optional<std::string> beta;
    std::optional<std::string> weight;
};

Json cmd_rootsys_info(const RunConfig& config);
Json cmd_weyl_enumerate(const RunConfig& config);
/// Single pairing, or the full admissible table when `table` is set. The
/// computed rows are appended to `rows` for CSV rendering.
Json cmd_pairing(const RunConfig& config, const PointSpec& beta, const PointSpec& beta_prime, bool table,
                 std::vector<PairingResult>& rows);
Json cmd_verify(const RunConfig& config);

/// Parses and runs one command line (without the program name). Writes the report
/// to out and diagnostics to err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_cache_dir);

}  // namespace bks::app
