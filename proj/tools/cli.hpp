#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bianchi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitConformance = 2;

/// Runs one command line (without the program name). Records go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bianchi::cli
