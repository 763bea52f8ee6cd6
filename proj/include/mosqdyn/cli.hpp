#pragma once

#include <ostream>
#include <span>
#include <string>

namespace mosqdyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `mosqdyn` tool. `args` excludes the program name.
/// Subcommands: classify, fixed-points, stability, simulate, simplex, sweep,
/// verify. Returns 0 on success, 1 when a verification check fails, 2 on
/// invalid parameters or usage, 3 on I/O failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mosqdyn::cli
