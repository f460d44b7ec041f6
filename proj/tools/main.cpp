#include <unistd.h>

#include "gaprep_cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return gaprep::cli::run_cli(args, std::cin, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
}
