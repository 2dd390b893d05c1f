#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evinf::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kInternalError = 2;

/// Runs the command line `args` (without the program name). Results go to
/// the files named by --out, or to `out` when --out is omitted; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace evinf::cli
