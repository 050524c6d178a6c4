#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env;
    if (const char* dir = std::getenv("BKS_CACHE_DIR")) env = dir;
    return bks::app::run_cli(args, std::cout, std::cerr, env);
}
