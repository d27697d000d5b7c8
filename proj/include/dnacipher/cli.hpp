#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dnacipher::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitKey = 3;
inline constexpr int kExitIo = 4;

/// Entry point behind the `dnacipher` executable. args[0] is the program
/// name. Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dnacipher::cli
