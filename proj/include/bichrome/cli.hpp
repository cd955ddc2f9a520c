#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bichrome {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

// Runs one CLI invocation. `args` excludes the program name. Documents go to
// `out`, error objects {"error": ..., "message": ...} go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bichrome
