#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rounding_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOperational = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 for success or a valid input, 2 for a
/// mathematically invalid input or a negative verdict, 1 for I/O, parse and
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rounding_forge::cli
