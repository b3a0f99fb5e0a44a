#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thinsphere::cli {

enum ExitCode : int { Ok = 0, Failed = 1, UsageOrIo = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinsphere::cli
