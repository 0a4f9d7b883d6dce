#include "rifs/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return rifs::run_cli(argc, argv, std::cout, std::cerr);
}
