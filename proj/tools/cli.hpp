#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rpr::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kSolver = 2 };

/// Entry point shared by the `rpr` binary and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpr::cli
