#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plumb::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plumb::cli
