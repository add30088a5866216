#include <iostream>
#include <string>
#include <vector>

#include "ppx/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return ppx::run_cli(args, std::cout, std::cerr);
}
