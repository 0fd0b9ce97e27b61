#include <iostream>
#include <string>
#include <vector>

#include "fmx/cli.hpp"

int main(int argc, char** argv)
{
    return fmx::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
