#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dnq/error.hpp"

namespace dnq::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidRadicand = 2;
inline constexpr int kBoundOverflow = 3;
inline constexpr int kSClass = 4;
inline constexpr int kUncovered = 5;
inline constexpr int kLibraryError = 6;
inline constexpr int kUsage = 64;
}  // namespace exit_code

int exit_code_for(Errc code);

/// Runs one command; `args` excludes the program name. Records go to `out`
/// one JSON object per line, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dnq::cli
