#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqlab::cli {

enum ExitCode : int {
    ok = 0,
    internal_error = 1,
    usage_error = 2,
    resource_cap = 3,
    self_check_failed = 4,
};

// Environment variable overriding the default degree cap.
inline constexpr const char* degree_cap_env = "SQLAB_DEGREE_CAP";

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqlab::cli
