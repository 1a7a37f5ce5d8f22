#pragma once

#include <string>
#include <vector>

namespace moishezon::cli {

struct CommandResult {
    int exit_code = 0;  ///< 0 success, 1 claim failure, 2 usage error
    std::string stdout_payload;
    std::string stderr_payload;
};

/// argv without the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace moishezon::cli
