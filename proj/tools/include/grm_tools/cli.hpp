#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grm::tools {

// Exit codes: 0 success, 1 failed check or internal error, 2 usage error,
// 3 size-guard rejection.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeGuard = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grm::tools
