#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagtilt::cli {

/// Exit codes: 0 success or confirmed, 1 refuted, 2 inconclusive,
/// 64 usage error, 65 malformed or invalid input data, 66 unreadable file.
inline constexpr int kConfirmed = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kNoInput = 66;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagtilt::cli
