#include <iostream>

#include "moishezon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = moishezon::cli::run(args);
    std::cout << result.stdout_payload;
    std::cerr << result.stderr_payload;
    return result.exit_code;
}
