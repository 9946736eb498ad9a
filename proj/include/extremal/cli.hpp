#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitLemmaFailure = 4;

/// Runs one command line (without the program name). Graph input is read
/// from `in` unless --input names a file.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace extremal
