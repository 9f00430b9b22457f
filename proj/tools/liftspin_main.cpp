#include <iostream>
#include <string>
#include <vector>

#include <liftspin/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return liftspin::run_cli(args, std::cout, std::cerr);
}
