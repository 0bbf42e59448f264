#include <exception>
#include <iostream>

#include "condcolor_cli/cli.hpp"

int main(int argc, char** argv) {
    try {
        const std::vector<std::string> args(argv + 1, argv + argc);
        return condcolor::cli::run_cli(args, std::cout, std::cerr).exit_code;
    } catch (const std::exception& e) {
        // anything reaching here is a bug, not a "no" answer
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
}
