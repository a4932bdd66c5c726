#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pnc::cli {

/// Exit status: 0 success, 1 domain error, 2 usage error.
enum Exit : int { kOk = 0, kDomain = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnc::cli
