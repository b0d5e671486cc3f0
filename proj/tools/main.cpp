#include <iostream>
#include <string>
#include <vector>

#include "blockmark/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return blockmark::cli::run(std::move(args), std::cout, std::cerr);
}
