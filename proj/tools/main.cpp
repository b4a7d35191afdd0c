#include "scoremetrics/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return scoremetrics::cli::run(argc, argv, std::cout, std::cerr);
}
