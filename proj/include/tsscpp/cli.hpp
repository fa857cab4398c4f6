#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsscpp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).  Data goes to `out`,
/// diagnostics to `err`.  Returns 0 on success, 1 when a verification fails
/// and 2 for usage errors and rejected input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsscpp::cli
