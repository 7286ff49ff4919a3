#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return ellarc::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return ellarc::cli::exit_failure;
    }
}
