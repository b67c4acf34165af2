#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfe::cli {

enum ExitCode : int {
    kOk = 0,
    kVerdictFalse = 1,
    kUsage = 2,
    kAlgorithmFailure = 3,
};

/// Runs one command. `args` excludes the program name; "-" as a path means
/// `in` or `out`. The default seed comes from CFE_SEED, else 0.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cfe::cli
