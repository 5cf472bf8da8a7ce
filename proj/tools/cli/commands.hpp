#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmfusion::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,       // command ran; verification passed
    kVerifyFailed = 1,  // cover verification produced FAIL
    kUsageError = 2,    // bad flags, parameters or input files
};

/// Largest p + q verified by `cover verify` without --allow-large.
inline constexpr int kDefaultVerifyBudget = 18;
/// Largest --max-order accepted by `cover search` without --allow-large.
inline constexpr long kDefaultSearchBudget = 24;

/// Runs the tool on args (without the program name), writing documents
/// to out and diagnostics to err. Returns an ExitCode value.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmfusion::cli
