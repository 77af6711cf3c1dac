#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmetria {

inline constexpr const char* kVersion = "0.1.0";

// Runs one CLI invocation. Exit codes: 0 success, 2 usage error,
// 3 computation error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symmetria
