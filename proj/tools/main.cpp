#include "cli.hpp"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return beslab::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
