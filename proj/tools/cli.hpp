#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z4dna::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFindingFailed = 1;
inline constexpr int kBuildError = 2;
inline constexpr int kHypothesisViolation = 3;
inline constexpr int kCapExceeded = 4;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace z4dna::cli
