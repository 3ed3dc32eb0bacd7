#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one command (args exclude the program name).  The report goes to
// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conlab::cli
