#include <iostream>
#include <string>
#include <vector>

#include "chainring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = chainring::cli::main(args, std::cin);
    std::cout << res.out;
    std::cerr << res.err;
    return res.code;
}
