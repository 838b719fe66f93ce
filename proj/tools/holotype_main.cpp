#include "holotype/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return holotype::cli::run(argc, argv, std::cout, std::cerr);
}
