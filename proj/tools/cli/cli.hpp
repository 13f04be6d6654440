#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resproc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleMismatch = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// args excludes the program name. Reads the problem from `in` unless
/// --seed asks for a generated instance.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace resproc::cli
