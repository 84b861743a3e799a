#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlacing::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace interlacing::cli
