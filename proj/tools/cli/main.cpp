#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

int main(int argc, char* argv[])
{
    std::ios::sync_with_stdio(false);
    const char* no_color = std::getenv("NO_COLOR");
    magicsq::cli::Streams io{std::cin, std::cout, std::cerr,
                             isatty(STDOUT_FILENO) != 0 && (no_color == nullptr || *no_color == '\0')};
    std::vector<std::string> args(argv + 1, argv + argc);
    return magicsq::cli::run(args, io);
}
